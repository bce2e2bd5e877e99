// Command-line front end. Talks to the library exclusively through the
// shared C API in fpg/fpg.h; every operand travels as JSON text.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 internal
// invariant violation.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fpg/fpg.h"

namespace {

int status_to_exit(fpg_status status) {
  switch (status) {
    case FPG_OK:
      return 0;
    case FPG_VERIFY_FAILED:
      return 1;
    case FPG_INVALID_INPUT:
    case FPG_NO_CONVERGENCE:
      return 2;
    default:
      return 3;
  }
}

[[noreturn]] void die(fpg_status status) {
  std::cerr << "fpg: error: " << fpg_last_error() << "\n";
  std::exit(status_to_exit(status));
}

void check(fpg_status status) {
  if (status != FPG_OK) die(status);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "fpg: error: cannot read '" << path << "'\n";
    std::exit(2);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// '@file' loads the file; everything else passes through.
std::string resolve_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return read_file(arg.substr(1));
  return arg;
}

// RAII wrappers over the C handles.
using SeriesPtr = std::unique_ptr<fpg_series, decltype(&fpg_series_free)>;
using Series2Ptr = std::unique_ptr<fpg_series2, decltype(&fpg_series2_free)>;

std::string owned_string(char* text) {
  std::string out = text ? text : "";
  fpg_string_free(text);
  return out;
}

/// Series operand: inline JSON, '@file', or a bare word ("x0x1" / "01" /
/// "e") standing for that word with coefficient 1 at the default degree.
SeriesPtr parse_series_arg(const std::string& raw, int degree) {
  std::string text = resolve_arg(raw);
  if (text.empty() || text[0] != '{') {
    int wdeg = fpg_word_wdeg(text.c_str());
    if (wdeg < 0) {
      std::cerr << "fpg: error: '" << text
                << "' is neither JSON nor a word over x0,x1\n";
      std::exit(2);
    }
    std::string word = text;
    if (word == "e") word = "";
    std::string normalized;
    for (char c : word)
      if (c == '0' || c == '1') normalized.push_back(c);
    text = "{\"max_degree\": " + std::to_string(std::max(degree, wdeg)) +
           ", \"terms\": {\"" + normalized + "\": \"1\"}}";
  }
  fpg_series* s = nullptr;
  check(fpg_series_parse(text.c_str(), &s));
  return SeriesPtr(s, fpg_series_free);
}

Series2Ptr parse_series2_arg(const std::string& raw) {
  std::string text = resolve_arg(raw);
  fpg_series2* s = nullptr;
  check(fpg_series2_parse(text.c_str(), &s));
  return Series2Ptr(s, fpg_series2_free);
}

void print_series(fpg_series* s) {
  char* text = nullptr;
  check(fpg_series_format(s, &text));
  std::cout << owned_string(text) << "\n";
  fpg_series_free(s);
}

void print_series2(fpg_series2* s) {
  char* text = nullptr;
  check(fpg_series2_format(s, &text));
  std::cout << owned_string(text) << "\n";
  fpg_series2_free(s);
}

struct OpContext {
  std::vector<std::string> args;
  int degree = 8;

  const std::string& arg(std::size_t i) const {
    if (i >= args.size()) {
      std::cerr << "fpg: error: operation needs more arguments\n";
      std::exit(2);
    }
    return args[i];
  }
};

using OpHandler = std::function<void(const OpContext&)>;

using BinarySeriesFn = fpg_status (*)(const fpg_series*, const fpg_series*,
                                      fpg_series**);
using BinarySeries2Fn = fpg_status (*)(const fpg_series2*, const fpg_series2*,
                                       fpg_series2**);
using UnarySeries2Fn = fpg_status (*)(const fpg_series2*, fpg_series2**);
using HopfFn = fpg_status (*)(const char*, int, char**);

OpHandler binary_series_op(BinarySeriesFn fn) {
  return [fn](const OpContext& ctx) {
    SeriesPtr a = parse_series_arg(ctx.arg(0), ctx.degree);
    SeriesPtr b = parse_series_arg(ctx.arg(1), ctx.degree);
    fpg_series* out = nullptr;
    check(fn(a.get(), b.get(), &out));
    print_series(out);
  };
}

OpHandler binary_series2_op(BinarySeries2Fn fn) {
  return [fn](const OpContext& ctx) {
    Series2Ptr a = parse_series2_arg(ctx.arg(0));
    Series2Ptr b = parse_series2_arg(ctx.arg(1));
    fpg_series2* out = nullptr;
    check(fn(a.get(), b.get(), &out));
    print_series2(out);
  };
}

OpHandler unary_series2_op(UnarySeries2Fn fn) {
  return [fn](const OpContext& ctx) {
    Series2Ptr a = parse_series2_arg(ctx.arg(0));
    fpg_series2* out = nullptr;
    check(fn(a.get(), &out));
    print_series2(out);
  };
}

OpHandler hopf_op(HopfFn fn) {
  return [fn](const OpContext& ctx) {
    char* out = nullptr;
    check(fn(ctx.arg(0).c_str(), std::max(ctx.degree, 1), &out));
    std::cout << owned_string(out) << "\n";
  };
}

const std::map<std::string, OpHandler>& op_table() {
  static const std::map<std::string, OpHandler> table = {
      {"wdeg",
       [](const OpContext& ctx) {
         int w = fpg_word_wdeg(ctx.arg(0) == "e" ? "" : ctx.arg(0).c_str());
         if (w < 0) {
           std::cerr << "fpg: error: bad word '" << ctx.arg(0) << "'\n";
           std::exit(2);
         }
         std::cout << w << "\n";
       }},
      {"shuffle", binary_series_op(fpg_shuffle)},
      {"add", binary_series_op(fpg_series_add)},
      {"compose", binary_series_op(fpg_compose)},
      {"shuffle-inverse",
       [](const OpContext& ctx) {
         SeriesPtr a = parse_series_arg(ctx.arg(0), ctx.degree);
         fpg_series* out = nullptr;
         check(fpg_shuffle_inverse(a.get(), &out));
         print_series(out);
       }},
      {"unshuffle",
       [](const OpContext& ctx) {
         char* out = nullptr;
         std::string word = ctx.arg(0) == "e" ? "" : ctx.arg(0);
         check(fpg_unshuffle(word.c_str(), &out));
         std::cout << owned_string(out) << "\n";
       }},
      {"scale",
       [](const OpContext& ctx) {
         SeriesPtr a = parse_series_arg(ctx.arg(0), ctx.degree);
         fpg_series* out = nullptr;
         check(fpg_series_scale(a.get(), ctx.arg(1).c_str(), &out));
         print_series(out);
       }},
      {"truncate",
       [](const OpContext& ctx) {
         SeriesPtr a = parse_series_arg(ctx.arg(0), ctx.degree);
         int degree = 0;
         try {
           degree = std::stoi(ctx.arg(1));
         } catch (const std::exception&) {
           std::cerr << "fpg: error: bad degree '" << ctx.arg(1) << "'\n";
           std::exit(2);
         }
         fpg_series* out = nullptr;
         check(fpg_series_truncate(a.get(), degree, &out));
         print_series(out);
       }},
      {"coefficient",
       [](const OpContext& ctx) {
         SeriesPtr a = parse_series_arg(ctx.arg(0), ctx.degree);
         char* out = nullptr;
         std::string word = ctx.arg(1) == "e" ? "" : ctx.arg(1);
         check(fpg_series_coefficient(a.get(), word.c_str(), &out));
         std::cout << owned_string(out) << "\n";
       }},
      {"mixed-compose",
       [](const OpContext& ctx) {
         SeriesPtr c = parse_series_arg(ctx.arg(0), ctx.degree);
         Series2Ptr d = parse_series2_arg(ctx.arg(1));
         fpg_series* out = nullptr;
         check(fpg_mixed_compose(c.get(), d.get(), &out));
         print_series(out);
       }},
      {"triangle", binary_series2_op(fpg_triangle)},
      {"dot-mul", binary_series2_op(fpg_dot_mul)},
      {"dot-inv", unary_series2_op(fpg_dot_inv)},
      {"star-mul", binary_series2_op(fpg_star_mul)},
      {"star-inv", unary_series2_op(fpg_star_inv)},
      {"r-tri-solve", binary_series2_op(fpg_r_tri_solve)},
      {"opposite-act", binary_series2_op(fpg_opposite_act)},
      {"pi1",
       [](const OpContext& ctx) {
         Series2Ptr c = parse_series2_arg(ctx.arg(0));
         fpg_series* out = nullptr;
         check(fpg_pi1(c.get(), &out));
         print_series(out);
       }},
      {"embed",
       [](const OpContext& ctx) {
         SeriesPtr c = parse_series_arg(ctx.arg(0), ctx.degree);
         fpg_series2* out = nullptr;
         check(fpg_embed(c.get(), &out));
         print_series2(out);
       }},
      {"lie-bracket", binary_series2_op(fpg_lie_bracket)},
      {"post-lie-act", binary_series2_op(fpg_post_lie_act)},
      {"derived-bracket", binary_series2_op(fpg_derived_bracket)},
      {"bullet", binary_series2_op(fpg_lie_bullet)},
      {"linearize-action", binary_series2_op(fpg_linearize_action)},
      {"hopf-delta", hopf_op(fpg_hopf_delta)},
      {"hopf-rho", hopf_op(fpg_hopf_rho)},
      {"hopf-coproduct", hopf_op(fpg_hopf_coproduct)},
      {"hopf-antipode", hopf_op(fpg_hopf_antipode)},
      {"hopf-eval",
       [](const OpContext& ctx) {
         Series2Ptr c = parse_series2_arg(ctx.arg(1));
         char* out = nullptr;
         check(fpg_hopf_evaluate(ctx.arg(0).c_str(), c.get(), &out));
         std::cout << owned_string(out) << "\n";
       }},
      {"evaluate-cf",
       [](const OpContext& ctx) {
         SeriesPtr c = parse_series_arg(ctx.arg(0), ctx.degree);
         char* out = nullptr;
         check(fpg_evaluate_cf(c.get(), resolve_arg(ctx.arg(1)).c_str(), &out));
         std::cout << owned_string(out) << "\n";
       }},
      {"evaluate-ff",
       [](const OpContext& ctx) {
         Series2Ptr c = parse_series2_arg(ctx.arg(0));
         char* out = nullptr;
         check(fpg_evaluate_ff(c.get(), resolve_arg(ctx.arg(1)).c_str(), &out));
         std::cout << owned_string(out) << "\n";
       }},
      {"closed-loop",
       [](const OpContext& ctx) {
         SeriesPtr c = parse_series_arg(ctx.arg(0), ctx.degree);
         Series2Ptr d = parse_series2_arg(ctx.arg(1));
         fpg_series* out = nullptr;
         check(fpg_closed_loop_series(c.get(), d.get(), &out));
         print_series(out);
       }},
  };
  return table;
}

std::string op_names() {
  std::string names;
  for (const auto& [name, handler] : op_table()) {
    if (!names.empty()) names += ", ";
    names += name;
  }
  return names;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fpg — shuffle/composition algebra, the affine feedback "
               "post-group and post-Lie algebra, coordinate Hopf algebra, "
               "and numerical Chen-Fliess evaluation"};
  app.require_subcommand(1);

  // fpg op <name> [args...]
  auto* op_cmd = app.add_subcommand(
      "op", "Run one operation; operands are inline JSON, @file, or words");
  std::string op_name;
  std::vector<std::string> op_args;
  int op_degree = 8;
  op_cmd->add_option("name", op_name, "One of: " + op_names())->required();
  op_cmd->add_option("args", op_args, "Operands");
  op_cmd->add_option("--degree", op_degree,
                     "Truncation degree for bare-word operands and Hopf maps");

  // fpg verify <suite> ...
  auto* verify_cmd =
      app.add_subcommand("verify", "Run a named verification suite");
  std::string suite;
  int v_degree = 0, v_cases = 0;
  unsigned long long v_seed = 42;
  bool v_json = false;
  verify_cmd
      ->add_option("suite", suite,
                   "shuffle, group, postgroup, postlie, hopf-duality, "
                   "cointeraction, numeric")
      ->required();
  verify_cmd->add_option("--degree", v_degree, "Truncation degree (0 = default)");
  verify_cmd->add_option("--cases", v_cases, "Random cases per check (0 = default)");
  verify_cmd->add_option("--seed", v_seed, "Master seed");
  verify_cmd->add_flag("--json", v_json, "Emit the full JSON report");

  // fpg simulate ...
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Picard simulation of the affine feedback loop");
  std::string c_file, d_file, signal_file;
  double picard_tol = 1e-10;
  int max_iter = 100;
  sim_cmd->add_option("--c", c_file, "Forward-path series (JSON file)")
      ->required();
  sim_cmd->add_option("--d", d_file, "Feedback pair (two-channel JSON file)")
      ->required();
  sim_cmd->add_option("--signal", signal_file, "Input signal (JSON file)")
      ->required();
  sim_cmd->add_option("--picard-tol", picard_tol, "Sup-norm stop tolerance");
  sim_cmd->add_option("--max-iter", max_iter, "Iteration budget");

  // fpg hopf-table ...
  auto* table_cmd = app.add_subcommand(
      "hopf-table", "Dump delta/rho/coproduct/antipode tables");
  int table_degree = 5;
  table_cmd->add_option("--max-degree", table_degree,
                        "Largest generator degree");

  CLI11_PARSE(app, argc, argv);

  if (op_cmd->parsed()) {
    auto it = op_table().find(op_name);
    if (it == op_table().end()) {
      std::cerr << "fpg: error: unknown operation '" << op_name
                << "' (known: " << op_names() << ")\n";
      return 2;
    }
    OpContext ctx{op_args, op_degree};
    it->second(ctx);
    return 0;
  }

  if (verify_cmd->parsed()) {
    char* report = nullptr;
    fpg_status status =
        fpg_run_suite(suite.c_str(), v_degree, v_cases, v_seed, &report);
    if (status != FPG_OK && status != FPG_VERIFY_FAILED) die(status);
    std::string text = owned_string(report);
    if (v_json) {
      std::cout << text << "\n";
    } else {
      // Small summary without dragging a JSON library into the CLI.
      auto field = [&](const std::string& key) -> std::string {
        auto pos = text.find("\"" + key + "\":");
        if (pos == std::string::npos) return "?";
        pos = text.find(':', pos) + 1;
        auto end = text.find_first_of(",}", pos);
        return text.substr(pos, end - pos);
      };
      std::cout << "suite " << suite << ": cases_run=" << field("cases_run")
                << " wall_ms=" << field("wall_ms") << " "
                << (status == FPG_OK ? "PASS" : "FAIL") << "\n";
      if (status != FPG_OK)
        std::cout << "rerun with --json for the failure witnesses\n";
    }
    return status_to_exit(status);
  }

  if (sim_cmd->parsed()) {
    SeriesPtr c = parse_series_arg("@" + c_file, 0);
    Series2Ptr d = parse_series2_arg("@" + d_file);
    char* out = nullptr;
    check(fpg_feedback_sim(c.get(), d.get(),
                           read_file(signal_file).c_str(), picard_tol,
                           max_iter, &out));
    std::cout << owned_string(out) << "\n";
    return 0;
  }

  if (table_cmd->parsed()) {
    char* out = nullptr;
    check(fpg_hopf_table(table_degree, &out));
    std::cout << owned_string(out) << "\n";
    return 0;
  }

  return 2;
}
