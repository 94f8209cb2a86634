#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permroots/counting.hpp"
#include "permroots/cycle_type.hpp"
#include "permroots/numbers.hpp"
#include "permroots/sequences.hpp"
#include "permroots/series.hpp"
#include "permroots/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

constexpr std::uint64_t kMaxSeriesWeight = 64;

using permroots::Parity;

unsigned default_workers() {
  const char* env = std::getenv("PERMROOT_WORKERS");
  if (env == nullptr || *env == '\0') {
    return 1;
  }
  char* end = nullptr;
  unsigned long value = std::strtoul(env, &end, 10);
  if (end == nullptr || *end != '\0' || value == 0) {
    throw CLI::ValidationError("PERMROOT_WORKERS",
                               "must be a positive integer, got \"" +
                                   std::string(env) + "\"");
  }
  return static_cast<unsigned>(value);
}

int cmd_roots(std::uint64_t k, const std::string& type_text, const std::string& format) {
  permroots::CycleType type = permroots::parse_cycle_type(type_text);
  permroots::RootCount counts = permroots::count_roots(k, type);
  bool has_root = counts.total > 0;
  if (format == "json") {
    nlohmann::json j;
    j["n"] = type.size();
    j["k"] = k;
    // Counts grow past any fixed integer width; serialize as decimal strings.
    j["total"] = permroots::to_decimal(counts.total);
    j["even"] = permroots::to_decimal(counts.even);
    j["odd"] = permroots::to_decimal(counts.odd);
    j["has_root"] = has_root;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n         " << type.size() << "\n"
              << "k         " << k << "\n"
              << "total     " << counts.total << "\n"
              << "even      " << counts.even << "\n"
              << "odd       " << counts.odd << "\n"
              << "has_root  " << (has_root ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_series(std::uint64_t k, std::uint64_t max_weight, bool signed_series) {
  permroots::EgfSeries series =
      signed_series ? permroots::build_signed_difference_series(k, max_weight)
                    : permroots::build_total_root_series(k, max_weight);
  std::cout << permroots::series_to_text(series);
  return kExitOk;
}

int cmd_oeis(const std::string& id, std::uint64_t k, const std::string& parity_text,
             std::uint64_t terms) {
  std::vector<permroots::BigInt> values;
  std::uint64_t offset = 0;
  if (!id.empty()) {
    const permroots::SequenceSpec* spec = permroots::find_sequence(id);
    if (spec == nullptr) {
      throw CLI::ValidationError("id", [&] {
        std::string msg = "unsupported sequence id \"" + id + "\"; supported:";
        for (const permroots::SequenceSpec& s : permroots::supported_sequences()) {
          msg += " " + s.id;
        }
        return msg;
      }());
    }
    values = permroots::generate_sequence(*spec, terms);
    offset = spec->offset;
  } else {
    Parity parity = parity_text == "odd" ? Parity::kOdd : Parity::kEven;
    values = permroots::identity_root_sequence(k, parity, terms);
  }
  std::cout << permroots::to_b_file(values, offset);
  return kExitOk;
}

int cmd_verify(std::uint64_t max_n, const std::vector<std::uint64_t>& ks,
               unsigned workers) {
  permroots::VerifyReport report =
      permroots::run_verify({.max_n = max_n, .ks = ks, .workers = workers});
  std::cout << report.text;
  std::printf("elapsed: %.3fs\n", report.elapsed_seconds);
  return report.ok ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of even and odd k-th roots of permutations"};
  app.require_subcommand(1);

  std::uint64_t k = 1;
  std::string type_text;
  std::string format = "text";
  auto* roots = app.add_subcommand("roots", "Count the k-th roots of one cycle type");
  roots->add_option("--k", k, "Root degree (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  roots->add_option("--type", type_text,
                    "Cycle type, e.g. \"1^4\" or \"2^2,5^1\" (\"\" for the empty type)")
      ->required();
  roots->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::uint64_t max_weight = 0;
  bool signed_series = false;
  auto* series = app.add_subcommand("series", "Print a truncated root-count series");
  series->add_option("--k", k, "Root degree (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  series->add_option("--max-weight", max_weight,
                     "Truncation weight (<= " + std::to_string(kMaxSeriesWeight) + ")")
      ->required()
      ->check(CLI::Range(std::uint64_t{0}, kMaxSeriesWeight));
  series->add_flag("--signed", signed_series,
                   "Print the even-minus-odd series instead of the total");

  std::string sequence_id;
  std::string parity_text = "even";
  std::uint64_t terms = 10;
  auto* oeis = app.add_subcommand("oeis", "Print a sequence in OEIS b-file format");
  auto* id_opt = oeis->add_option("id", sequence_id, "Sequence id, e.g. A000704");
  auto* k_opt = oeis->add_option("--k", k, "Root degree for an ad-hoc sequence")
                    ->check(CLI::PositiveNumber)
                    ->excludes(id_opt);
  oeis->add_option("--parity", parity_text, "Parity for an ad-hoc sequence")
      ->check(CLI::IsMember({"even", "odd"}))
      ->needs(k_opt);
  oeis->add_option("--terms", terms, "Number of terms (>= 1)")
      ->check(CLI::PositiveNumber);

  std::uint64_t max_n = 5;
  std::vector<std::uint64_t> k_list{2};
  unsigned workers = 0;
  auto* verify = app.add_subcommand(
      "verify", "Cross-check oracle, closed forms, and series exhaustively");
  verify->add_option("--max-n", max_n, "Largest permutation size (<= 10)")
      ->check(CLI::Range(std::uint64_t{0}, std::uint64_t{10}));
  verify->add_option("--k", k_list, "Root degrees, comma separated")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  verify->add_option("--workers", workers,
                     "Worker threads (default: PERMROOT_WORKERS or 1)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
    if (roots->parsed()) {
      return cmd_roots(k, type_text, format);
    }
    if (series->parsed()) {
      return cmd_series(k, max_weight, signed_series);
    }
    if (oeis->parsed()) {
      if (sequence_id.empty() && k_opt->count() == 0) {
        throw CLI::ValidationError("oeis", "need a sequence id or --k");
      }
      return cmd_oeis(sequence_id, k, parity_text, terms);
    }
    if (verify->parsed()) {
      if (workers == 0) {
        workers = default_workers();
      }
      return cmd_verify(max_n, k_list, workers);
    }
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
