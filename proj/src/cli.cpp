#include "stanley/cli.hpp"

#include <csignal>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "stanley/counting.hpp"
#include "stanley/errors.hpp"
#include "stanley/formulas.hpp"
#include "stanley/guess.hpp"
#include "stanley/json_io.hpp"
#include "stanley/reduced_words.hpp"
#include "stanley/service.hpp"
#include "stanley/verify.hpp"

namespace stanley::cli {

namespace {

using nlohmann::json;

struct Context {
  Context(std::ostream& o, std::ostream& e) : out(o), err(e) {}

  std::ostream& out;
  std::ostream& err;
  bool as_json = false;
  PlayCache cache;

  void emit(const json& j, const std::string& text) {
    if (as_json) {
      out << j.dump() << '\n';
    } else {
      out << text << '\n';
    }
  }
};

std::string play_text(const Play& play) {
  std::string line;
  for (std::size_t i = 0; i < play.size(); ++i) {
    if (i) line += ", ";
    line += format_position(play[i]);
  }
  return line;
}

int emit_report(Context& ctx, const VerificationReport& report) {
  if (ctx.as_json) {
    ctx.out << report_json(report).dump() << '\n';
  } else {
    ctx.out << report.summary() << '\n';
    for (const auto& m : report.witnesses) {
      ctx.out << "  mismatch " << m.input << ": expected " << m.expected << ", got " << m.actual
              << '\n';
    }
    ctx.out << (report.ok() ? "OK" : "FAILED") << '\n';
  }
  return report.ok() ? exit_ok : exit_failure;
}

Server* active_server = nullptr;

void stop_active_server(int) {
  if (active_server) active_server->stop();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact play counts and identity checks for Stanley Solitaire", "stanley"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx(out, err);
  app.add_flag("--json", ctx.as_json, "Machine-readable output (counts as decimal strings)");

  std::function<int()> action;

  // count / moves / enumerate / sample
  std::string pos_text;
  auto* count = app.add_subcommand("count", "Number of complete plays from a position");
  count->add_option("position", pos_text, "e.g. 2,2,1 or [2,2,1]")->required();
  count->callback([&] {
    action = [&] {
      const auto p = parse_position(pos_text);
      const auto n = count_plays(p, ctx.cache);
      ctx.emit({{"position", position_json(p)}, {"count", count_json(n)}}, n.str());
      return exit_ok;
    };
  });

  auto* moves = app.add_subcommand("moves", "Legal moves with child positions and counts");
  moves->add_option("position", pos_text)->required();
  moves->callback([&] {
    action = [&] {
      const auto p = parse_position(pos_text);
      json list = json::array();
      std::string text = format_position(p) + "  (" + count_plays(p, ctx.cache).str() + " plays)";
      for (const auto& [move, child] : legal_moves(p)) {
        const auto n = count_plays(child, ctx.cache);
        list.push_back(
            {{"index", move.index}, {"child", position_json(child)}, {"count", count_json(n)}});
        text += "\n  " + std::to_string(move.index) + ": " + format_position(child) + "  (" +
                n.str() + ")";
      }
      ctx.emit({{"position", position_json(p)}, {"moves", list}}, text);
      return exit_ok;
    };
  });

  std::uint64_t limit = 1000;
  auto* enumerate = app.add_subcommand("enumerate", "List every complete play");
  enumerate->add_option("position", pos_text)->required();
  enumerate->add_option("--limit", limit, "Refuse if there are more plays than this")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  enumerate->callback([&] {
    action = [&] {
      const auto p = parse_position(pos_text);
      const auto plays = enumerate_plays(p, limit, ctx.cache);
      json list = json::array();
      std::string text;
      for (const auto& play : plays) {
        list.push_back(play_json(play));
        if (!text.empty()) text += '\n';
        text += play_text(play);
      }
      ctx.emit({{"position", position_json(p)}, {"count", count_json(plays.size())}, {"plays", list}},
               text);
      return exit_ok;
    };
  });

  std::uint64_t seed = 0;
  auto* sample = app.add_subcommand("sample", "One uniformly random complete play");
  sample->add_option("position", pos_text)->required();
  sample->add_option("--seed", seed)->capture_default_str();
  sample->callback([&] {
    action = [&] {
      const auto p = parse_position(pos_text);
      Rng rng(seed);
      const auto play = sample_play(p, rng, ctx.cache);
      ctx.emit({{"play", play_json(play)}}, play_text(play));
      return exit_ok;
    };
  });

  // formulas
  std::string shape_text;
  auto* yfm_cmd = app.add_subcommand("yfm", "Product formula for a partition");
  yfm_cmd->add_option("partition", shape_text, "weakly decreasing, e.g. 3,2,1")->required();
  yfm_cmd->callback([&] {
    action = [&] {
      const auto a = parse_partition(shape_text);
      const auto v = yfm(a);
      ctx.emit({{"partition", format_partition(a)}, {"value", count_json(v)}}, v.str());
      return exit_ok;
    };
  });

  std::uint64_t syt_bound = default_syt_bound;
  auto* syt = app.add_subcommand("syt", "Brute-force standard Young tableaux count");
  syt->add_option("partition", shape_text)->required();
  syt->add_option("--bound", syt_bound, "Largest shape size attempted")->capture_default_str();
  syt->callback([&] {
    action = [&] {
      const auto a = parse_partition(shape_text);
      const auto v = count_syt_bruteforce(a, syt_bound);
      ctx.emit({{"partition", format_partition(a)}, {"value", count_json(v)}}, v.str());
      return exit_ok;
    };
  });

  ThreePiles piles;
  auto* fact3 = app.add_subcommand("fact3", "Closed form for position [b,c,a], a >= b >= c >= 1");
  fact3->add_option("--a", piles.a, "Rightmost (largest) pile")->required();
  fact3->add_option("--b", piles.b, "Leftmost pile")->required();
  fact3->add_option("--c", piles.c, "Middle (smallest) pile")->required();
  fact3->callback([&] {
    action = [&] {
      const auto v = fact_three_piles(piles);
      const auto p = Position::normalize({piles.b, piles.c, piles.a});
      ctx.emit({{"position", position_json(p)}, {"value", count_json(v)}}, v.str());
      return exit_ok;
    };
  });

  std::size_t k = 0;
  bool list_avoiders = false;
  auto* avoiders = app.add_subcommand("avoiders", "231-avoiding permutations of size k");
  avoiders->add_option("k", k)->required()->check(CLI::Range(0, 10));
  avoiders->add_flag("--list", list_avoiders, "Print every avoider");
  avoiders->callback([&] {
    action = [&] {
      const auto found = avoiders_231(k);
      json list = json::array();
      std::string text = std::to_string(found.size()) + " (catalan " + catalan(k).str() + ")";
      for (const auto& w : found) {
        list.push_back(format_permutation(w));
        if (list_avoiders) text += "\n" + format_permutation(w);
      }
      json j{{"k", k}, {"count", count_json(found.size())}, {"catalan", count_json(catalan(k))}};
      if (list_avoiders) j["avoiders"] = list;
      ctx.emit(j, text);
      return exit_ok;
    };
  });

  std::string pattern_text;
  auto* arrange_cmd = app.add_subcommand("arrange", "Rearrange a partition by a pattern and count");
  arrange_cmd->add_option("partition", shape_text)->required();
  arrange_cmd->add_option("pattern", pattern_text, "one-line notation, e.g. 2,3,1")->required();
  arrange_cmd->callback([&] {
    action = [&] {
      const auto a = parse_partition(shape_text);
      const auto w = parse_permutation(pattern_text);
      const auto p = arrange(a, w);
      const auto n = count_plays(p, ctx.cache);
      const auto formula = yfm(a);
      const bool avoids = is_231_avoiding(w);
      ctx.emit({{"position", position_json(p)},
                {"count", count_json(n)},
                {"yfm", count_json(formula)},
                {"avoids_231", avoids}},
               format_position(p) + "  count " + n.str() + "  yfm " + formula.str() +
                   (avoids ? "  (231-avoiding)" : "  (contains 231)"));
      return exit_ok;
    };
  });

  // reduced words
  std::string perm_text;
  bool bruteforce = false;
  auto* reduced = app.add_subcommand("reduced", "Count reduced words of a permutation");
  reduced->add_option("permutation", perm_text, "one-line notation, e.g. 4,2,1,3")->required();
  reduced->add_flag("--bruteforce", bruteforce, "Exhaustive word search (n <= 4)");
  reduced->callback([&] {
    action = [&] {
      const auto w = parse_permutation(perm_text);
      const auto v = bruteforce ? count_reduced_words_bruteforce(w) : count_reduced_words(w);
      ctx.emit({{"permutation", format_permutation(w)}, {"count", count_json(v)}}, v.str());
      return exit_ok;
    };
  });

  auto* witness = app.add_subcommand("witness", "Witness permutation for a strictly decreasing partition");
  witness->add_option("partition", shape_text)->required();
  witness->callback([&] {
    action = [&] {
      const auto a = parse_partition(shape_text);
      const auto w = stanley_witness(a);
      const auto words = count_reduced_words(w);
      const auto formula = yfm(a);
      ctx.emit({{"permutation", format_permutation(w)},
                {"reduced_words", count_json(words)},
                {"yfm", count_json(formula)}},
               format_permutation(w) + "  reduced words " + words.str() + "  yfm " +
                   formula.str());
      return words == formula ? exit_ok : exit_failure;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Exhaustive identity sweeps");
  verify->require_subcommand(1);

  std::uint64_t max_sum = 0;
  std::uint64_t max_part = 0;
  std::size_t max_length = 0;
  std::size_t max_n = 0;
  std::size_t max_k = 0;
  std::uint64_t max_a = 0;

  const auto sweep = [&](const char* name, const char* help) {
    return verify->add_subcommand(name, help);
  };

  auto* v_yfm = sweep("yfm", "count_plays = product formula over partitions");
  v_yfm->add_option("--max-sum", max_sum)->default_val(default_yfm_max_sum);
  v_yfm->callback([&] { action = [&] { return emit_report(ctx, verify_yfm(max_sum, ctx.cache)); }; });

  auto* v_fact3 = sweep("fact3", "count_plays([b,c,a]) = three-pile closed form");
  v_fact3->add_option("--max-sum", max_sum)->default_val(default_fact3_max_sum);
  v_fact3->callback(
      [&] { action = [&] { return emit_report(ctx, verify_fact3(max_sum, ctx.cache)); }; });

  auto* v_rearrange = sweep("rearrange", "231-avoiding rearrangements keep the formula");
  v_rearrange->add_option("--max-sum", max_sum)->default_val(default_rearrange_max_sum);
  v_rearrange->add_option("--max-length", max_length)->default_val(default_rearrange_max_length);
  bool strict_only = false;
  v_rearrange->add_flag("--strict", strict_only, "Only partitions with distinct parts");
  v_rearrange->callback([&] {
    action = [&] {
      return emit_report(ctx, verify_rearrange(max_sum, max_length, ctx.cache, strict_only));
    };
  });

  auto* v_witness = sweep("witness", "Reduced words of the witness permutation = formula");
  v_witness->add_option("--max-part", max_part)->default_val(default_witness_max_part)
      ->check(CLI::Range(1, 10));
  v_witness->callback([&] { action = [&] { return emit_report(ctx, verify_witness(max_part)); }; });

  auto* v_staircase = sweep("staircase", "Reduced words of [n..1] = staircase formula");
  v_staircase->add_option("--max-n", max_n)->default_val(default_staircase_max_n)
      ->check(CLI::Range(1, 10));
  v_staircase->callback([&] { action = [&] { return emit_report(ctx, verify_staircase(max_n)); }; });

  auto* v_rec = sweep("recurrences", "Two-pile recurrence identities");
  v_rec->add_option("--max", max_a)->default_val(default_recurrence_max);
  v_rec->callback(
      [&] { action = [&] { return emit_report(ctx, verify_recurrences(max_a, ctx.cache)); }; });

  auto* v_syt = sweep("syt", "Brute-force tableaux = formula");
  v_syt->add_option("--max-sum", max_sum)->default_val(default_syt_max_sum);
  v_syt->callback([&] { action = [&] { return emit_report(ctx, verify_syt(max_sum)); }; });

  auto* v_enum = sweep("enumeration", "Enumerated plays = DP count");
  v_enum->add_option("--max-sum", max_sum)->default_val(default_enumeration_max_sum);
  v_enum->add_option("--max-length", max_length)->default_val(default_enumeration_max_length);
  v_enum->callback([&] {
    action = [&] { return emit_report(ctx, verify_enumeration(max_sum, max_length, ctx.cache)); };
  });

  auto* v_census = sweep("census", "231-avoiders in S_k = Catalan(k)");
  v_census->add_option("--max-k", max_k)->default_val(default_census_max_k)->check(CLI::Range(1, 10));
  v_census->callback([&] { action = [&] { return emit_report(ctx, verify_census(max_k)); }; });

  // guess
  std::string order_text = "ge";
  std::size_t gap = 0;
  unsigned degree = 4;
  std::uint64_t range = 10;
  FitOptions fit;
  auto* guess = app.add_subcommand("guess", "Fit (x+y)!/((x+p)!(y+q)!) * P(x,y) to [x,0^gap,y]");
  guess->add_option("--template", order_text, "Constraint: ge (x>=y), gt (x>y), lt (x<y)")
      ->capture_default_str();
  guess->add_option("--gap", gap, "Number of empty piles between x and y")->capture_default_str();
  guess->add_option("--degree", degree, "Largest total degree tried for P")->capture_default_str();
  guess->add_option("--range", range, "Sample grid is 1 <= x, y <= range")->capture_default_str();
  guess->add_option("--offset-min", fit.offset_min)->capture_default_str();
  guess->add_option("--offset-max", fit.offset_max)->capture_default_str();
  guess->add_option("--holdout", fit.holdout)->capture_default_str();
  guess->callback([&] {
    action = [&] {
      const Template t{gap, parse_order(order_text)};
      fit.max_degree = degree;
      const auto grid = template_grid(t, range);
      const auto result = fit_template(t, grid, fit, ctx.cache);
      json j{{"template", t.shape()},
             {"constraint", t.constraint()},
             {"training_points", result.training_points},
             {"holdout_points", result.holdout_points},
             {"hypotheses_tried", result.hypotheses_tried}};
      if (result.form) {
        j["fit"] = fitted_json(*result.form);
        ctx.emit(j, result.form->to_string());
        return exit_ok;
      }
      j["fit"] = nullptr;
      ctx.emit(j, "no fit for " + t.shape() + " with " + t.constraint() + " up to degree " +
                      std::to_string(degree));
      return exit_failure;
    };
  });

  // serve
  ServiceOptions service;
  std::string static_dir;
  std::size_t cache_cap = *service.cache_cap;
  auto* serve = app.add_subcommand("serve", "HTTP JSON API and static UI");
  serve->add_option("--port", service.port)->capture_default_str();
  serve->add_option("--bind", service.bind)->capture_default_str();
  serve->add_option("--static", static_dir, "Directory with the built UI");
  serve->add_option("--cache-cap", cache_cap, "Max memo entries")->capture_default_str();
  serve->add_option("--max-total", service.max_total, "Largest candy total served")
      ->capture_default_str();
  serve->callback([&] {
    action = [&] {
      if (!static_dir.empty()) service.static_dir = static_dir;
      service.cache_cap = cache_cap;
      Server server(service);
      active_server = &server;
      std::signal(SIGINT, stop_active_server);
      std::signal(SIGTERM, stop_active_server);
      ctx.err << "listening on http://" << service.bind << ":" << service.port << '\n';
      const bool ok = server.listen();
      active_server = nullptr;
      if (!ok) {
        ctx.err << "could not bind " << service.bind << ":" << service.port << '\n';
        return exit_failure;
      }
      return exit_ok;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return exit_usage;
  }

  if (!action) {
    err << "usage error: no command\n";
    return exit_usage;
  }
  try {
    return action();
  } catch (const parse_error& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const invalid_input& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const limit_exceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace stanley::cli
