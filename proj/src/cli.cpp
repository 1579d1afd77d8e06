#include "qfp/cli.hpp"

#include "qfp/serialization.hpp"
#include "qfp/sweep.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qfp::cli {

namespace {

constexpr std::size_t kTextSideLimit = 160;

std::vector<Claim> parse_claim_list(const std::vector<std::string>& items) {
  std::vector<Claim> claims;
  for (const auto& item : items) {
    if (item == "all") {
      claims.assign(all_claims().begin(), all_claims().end());
      continue;
    }
    auto c = parse_claim(item);
    if (!c) throw UsageError("unknown claim identifier: " + item);
    if (std::find(claims.begin(), claims.end(), *c) == claims.end()) claims.push_back(*c);
  }
  std::sort(claims.begin(), claims.end());
  claims.erase(std::unique(claims.begin(), claims.end()), claims.end());
  return claims;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string elide(std::string s) {
  if (s.size() <= kTextSideLimit) return s;
  const auto total = s.size();
  s.resize(kTextSideLimit);
  return s + " ... (" + std::to_string(total) + " chars)";
}

std::string optional_text(const std::optional<Polynomial>& a) { return a ? to_text(*a) : ""; }

double elapsed_ms(const VerificationReport& r) {
  return std::chrono::duration<double, std::milli>(r.elapsed).count();
}

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact q-Fibonacci and q-Pell computations and congruence checks", "qfp"};
  app.require_subcommand(1, 1);

  RunConfig config;
  std::string format = "text";
  std::string output;
  std::string sequence;
  std::vector<std::string> claim_items;
  bool all = false;
  bool no_timing = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", output, "Write to PATH instead of stdout");
  };

  auto* compute = app.add_subcommand("compute", "Print one term of a sequence");
  compute->add_option("sequence", sequence, "fib, fib-hat, pell or pell-hat")->required();
  compute->add_option("n", config.n, "Index")->required()->check(CLI::NonNegativeNumber);
  add_common(compute);

  auto* verify = app.add_subcommand("verify", "Check claims over ranges of primes and indices");
  verify->add_option("--claims", claim_items, "Comma list of claim ids, or all")->delimiter(',');
  verify->add_flag("--all", all, "Same as --claims all");
  verify->add_option("--p-max", config.p_max, "Largest prime tried")->check(CLI::PositiveNumber);
  verify->add_option("--n-max", config.n_max, "Largest index tried")->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", no_timing, "Write elapsed_ms as 0");
  add_common(verify);

  auto* table = app.add_subcommand("table", "Residues mod [p]_q for each odd prime");
  table->add_option("--p-max", config.p_max, "Largest prime tried")->check(CLI::PositiveNumber);
  table->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(table);

  std::vector<std::string> tail(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(tail);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    for (auto* sub : {compute, verify, table}) {
      if (sub->parsed()) message += "\n" + sub->help();
    }
    throw UsageError(message);
  }

  if (compute->parsed()) {
    config.command = Command::compute;
    auto v = parse_sequence_variant(sequence);
    if (!v) throw UsageError("unknown sequence: " + sequence + " (fib, fib-hat, pell, pell-hat)");
    config.sequence = *v;
  } else if (verify->parsed()) {
    config.command = Command::verify;
    if (all) claim_items.emplace_back("all");
    config.claims = parse_claim_list(claim_items.empty() ? std::vector<std::string>{"all"} : claim_items);
  } else {
    config.command = Command::table;
  }
  config.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  if (!output.empty()) config.output_path = output;
  config.timing = !no_timing;
  return config;
}

int cmd_compute(const RunConfig& config, std::ostream& out) {
  const Polynomial term = sequence_term(config.sequence, config.n);
  switch (config.format) {
    case Format::json:
      out << to_json(term).dump() << '\n';
      break;
    case Format::csv:
      out << "exponent,coefficient\n";
      for (std::size_t i = 0; i < term.size(); ++i) out << i << ',' << term.coeff(i).get_str() << '\n';
      break;
    case Format::text:
      out << to_text(term) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  SweepConfig sweep;
  sweep.claims = config.claims;
  sweep.p_max = config.p_max;
  sweep.n_max = config.n_max;
  sweep.jobs = config.jobs;
  return write_reports(run_sweep(sweep), config, out);
}

int write_reports(std::span<const VerificationReport> reports, const RunConfig& config, std::ostream& out) {
  std::size_t failed = 0, skipped = 0;
  if (config.format == Format::csv) {
    out << "claim_id,params,passed,skipped,oracle_agreed,elapsed_ms,lhs,rhs,note\n";
  }
  for (const auto& r : reports) {
    if (!r.passed) ++failed;
    if (r.skipped) ++skipped;
    switch (config.format) {
      case Format::json:
        out << to_json(r, config.timing).dump() << '\n';
        break;
      case Format::csv: {
        std::ostringstream ms;
        ms << (config.timing ? elapsed_ms(r) : 0.0);
        out << csv_field(r.claim_id) << ',' << csv_field(params_text(r)) << ',' << (r.passed ? "true" : "false")
            << ',' << (r.skipped ? "true" : "false") << ',' << (r.oracle_agreed ? "true" : "false") << ','
            << ms.str() << ',' << csv_field(to_text(r.lhs)) << ',' << csv_field(to_text(r.rhs)) << ','
            << csv_field(r.note) << '\n';
        break;
      }
      case Format::text: {
        out << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << ' ' << r.claim_id << ' ' << params_text(r);
        if (config.timing) out << ' ' << elapsed_ms(r) << "ms";
        if (!r.note.empty()) out << "  (" << r.note << ')';
        out << '\n';
        if (!r.passed) {
          out << "    lhs: " << elide(to_text(r.lhs)) << '\n';
          out << "    rhs: " << elide(to_text(r.rhs)) << '\n';
        }
        break;
      }
    }
  }
  if (config.format == Format::text) {
    out << reports.size() << " reports, " << reports.size() - failed << " passed (" << skipped
        << " skipped), " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitFailed;
}

int cmd_table(const RunConfig& config, std::ostream& out) {
  const auto rows = residue_table(config.p_max, config.jobs);
  auto alpha_text = [](const ResidueTableRow& row) { return row.alpha ? std::to_string(*row.alpha) : ""; };

  switch (config.format) {
    case Format::json:
      for (const auto& row : rows) {
        nlohmann::ordered_json j;
        j["p"] = row.p;
        j["legendre5"] = row.legendre5;
        j["legendre2"] = row.legendre2;
        j["alpha"] = row.alpha ? nlohmann::ordered_json(*row.alpha) : nlohmann::ordered_json(nullptr);
        auto opt = [](const std::optional<Polynomial>& a) {
          return a ? to_json(*a) : nlohmann::ordered_json(nullptr);
        };
        j["fib_p"] = opt(row.fib_p);
        j["fib_p_plus_1"] = opt(row.fib_p_plus_1);
        j["fib_hat_p_minus_1"] = opt(row.fib_hat_p_minus_1);
        j["fib_hat_p"] = opt(row.fib_hat_p);
        j["pell_p_scaled"] = to_json(row.pell_p_scaled);
        j["pell_hat_p"] = to_json(row.pell_hat_p);
        j["pell_diff"] = to_json(row.pell_diff);
        j["pell_hat_diff"] = to_json(row.pell_hat_diff);
        out << j.dump() << '\n';
      }
      break;
    case Format::csv:
      out << "p,legendre5,legendre2,alpha,fib_p,fib_p_plus_1,fib_hat_p_minus_1,fib_hat_p,"
             "pell_p_scaled,pell_hat_p,pell_diff,pell_hat_diff\n";
      for (const auto& row : rows) {
        out << row.p << ',' << row.legendre5 << ',' << row.legendre2 << ',' << alpha_text(row) << ','
            << csv_field(optional_text(row.fib_p)) << ',' << csv_field(optional_text(row.fib_p_plus_1)) << ','
            << csv_field(optional_text(row.fib_hat_p_minus_1)) << ',' << csv_field(optional_text(row.fib_hat_p))
            << ',' << csv_field(to_text(row.pell_p_scaled)) << ',' << csv_field(to_text(row.pell_hat_p)) << ','
            << csv_field(to_text(row.pell_diff)) << ',' << csv_field(to_text(row.pell_hat_diff)) << '\n';
      }
      break;
    case Format::text:
      for (const auto& row : rows) {
        out << "p=" << row.p << " (5/p)=" << row.legendre5 << " (2/p)=" << row.legendre2;
        if (row.alpha) out << " alpha=" << *row.alpha;
        out << '\n';
        if (row.fib_p) {
          out << "  F_p          = " << to_text(*row.fib_p) << '\n'
              << "  F_(p+1)      = " << to_text(*row.fib_p_plus_1) << '\n'
              << "  Fhat_(p-1)   = " << to_text(*row.fib_hat_p_minus_1) << '\n'
              << "  Fhat_p       = " << to_text(*row.fib_hat_p) << '\n';
        }
        out << "  q^e P_p      = " << to_text(row.pell_p_scaled) << '\n'
            << "  Phat_p       = " << to_text(row.pell_hat_p) << '\n'
            << "  P_(p+1)-P_p  = " << to_text(row.pell_diff) << '\n'
            << "  Phat diff    = " << to_text(row.pell_hat_diff) << '\n';
      }
      break;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(args, out);
  } catch (const UsageError& e) {
    err << "qfp: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!config) return kExitOk;

  std::ofstream file;
  std::ostream* sink = &out;
  if (config->output_path) {
    file.open(*config->output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "qfp: cannot open " << *config->output_path << " for writing\n";
      return kExitUsage;
    }
    sink = &file;
  }

  int code = kExitOk;
  try {
    switch (config->command) {
      case Command::compute:
        code = cmd_compute(*config, *sink);
        break;
      case Command::verify:
        code = cmd_verify(*config, *sink);
        break;
      case Command::table:
        code = cmd_table(*config, *sink);
        break;
    }
  } catch (const std::exception& e) {
    err << "qfp: " << e.what() << '\n';
    return kExitFailed;
  }
  sink->flush();
  if (!*sink) {
    err << "qfp: write failed\n";
    return kExitFailed;
  }
  return code;
}

}  // namespace qfp::cli
