// posit: positionality checks, games and strategy reduction for languages
// given as deterministic parity automata.
//
// Exit codes: 0 holds / positional / pass, 1 refuted / not positional (also
// a sinkful arena, an arena with Adam vertices given to reduce, or a failed
// reduction), 2 malformed input or an exceeded limit.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "posit/error.hpp"
#include "posit/gadgets.hpp"
#include "posit/io.hpp"
#include "posit/reduction.hpp"
#include "posit/selftest.hpp"

namespace {

using namespace posit;

constexpr int kHolds = 0;
constexpr int kRefuted = 1;
constexpr int kInputError = 2;

std::size_t monoid_cap() {
  if (const char* env = std::getenv("POSIT_MONOID_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, std::string("POSIT_MONOID_CAP is not a number: ") + env);
    }
  }
  return kDefaultMonoidCap;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SinkVertex:
    case ErrorKind::NotEveOnly:
    case ErrorKind::IncomparableLassos:
    case ErrorKind::MergeBrokeWinning:
    case ErrorKind::PreconditionViolated:
      return kRefuted;
    default:
      return kInputError;
  }
}

StateId parse_state(const Dpa& a, const std::string& token) {
  if (auto s = a.find_state(token)) return *s;
  throw Error(ErrorKind::ParseError, "unknown state '" + token + "'");
}

std::string vertex_list(const Arena& arena, const std::vector<VertexId>& vertices) {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out += (i ? ", " : "") + arena.vertex(vertices[i]).name;
  return out + "}";
}

struct Output {
  bool json = false;

  void emit(const Json& j, const std::string& text) const {
    if (json)
      std::cout << j.dump() << '\n';
    else
      std::cout << text;
  }
};

int cmd_check(const std::string& dpa_file, const Output& out) {
  const Dpa a = load_dpa(dpa_file);
  const auto verdict = check_positional(a, monoid_cap());
  Json j{{"positional", verdict.positional}};
  std::string text;
  if (verdict.positional) {
    j["failed_property"] = nullptr;
    text = "positional\n";
  } else {
    j["failed_property"] = verdict.failed_property;
    j["witness"] = witness_to_json(*verdict.witness);
    text = "not positional (property " + std::to_string(verdict.failed_property) + ")\nwitness: " +
           j["witness"].dump() + "\n";
  }
  out.emit(j, text);
  return verdict.positional ? kHolds : kRefuted;
}

int cmd_member(const std::string& dpa_file, const std::string& lasso, const Output& out) {
  const Dpa a = load_dpa(dpa_file);
  const bool in = member(a, parse_lasso(lasso, a.alphabet()));
  out.emit(Json{{"member", in}}, in ? "true\n" : "false\n");
  return in ? kHolds : kRefuted;
}

int cmd_compare(const std::string& dpa_file, const std::string& left, const std::string& right,
                const Output& out) {
  const Dpa a = load_dpa(dpa_file);
  const auto c = compare_lassos(a, parse_lasso(left, a.alphabet()), parse_lasso(right, a.alphabet()));
  Json j{{"relation", to_string(c.relation)}};
  std::string text = to_string(c.relation);
  if (c.relation == Relation::Incomparable) {
    j["u"] = c.u;
    j["up"] = c.u_prime;
    text += " u=" + c.u + " u'=" + c.u_prime;
  }
  out.emit(j, text + "\n");
  return c.relation == Relation::Incomparable ? kRefuted : kHolds;
}

int cmd_include(const std::string& dpa_file, const std::string& p, const std::string& q,
                const Output& out) {
  const Dpa a = load_dpa(dpa_file);
  const auto witness = residual_included(a, parse_state(a, p), parse_state(a, q));
  Json j{{"included", !witness}};
  if (witness) j["witness"] = witness->to_string();
  out.emit(j, witness ? "no; witness " + witness->to_string() + "\n" : "yes\n");
  return witness ? kRefuted : kHolds;
}

int cmd_solve(const std::string& dpa_file, const std::string& arena_file, const Output& out) {
  const Game game(load_arena(arena_file), load_dpa(dpa_file));
  const auto solved = solve_game(game);
  const bool verified = verify_strategy(game, solved.strategy, solved.initial_states);
  Json region = Json::array();
  for (VertexId v : solved.winning_region) region.push_back(game.arena.vertex(v).name);
  const Json j{{"region", region},
               {"memory", solved.strategy.memory()},
               {"memory_states", solved.strategy.num_states},
               {"verified", verified}};
  out.emit(j, "region = " + vertex_list(game.arena, solved.winning_region) +
                  "\nmemory <= " + std::to_string(solved.strategy.memory()) +
                  "\nstrategy " + (verified ? "verified" : "NOT verified") + "\n");
  return verified ? kHolds : kRefuted;
}

int cmd_reduce(const std::string& dpa_file, const std::string& arena_file, const Output& out) {
  const Game game(load_arena(arena_file), load_dpa(dpa_file));
  if (!game.arena.eve_only()) throw Error(ErrorKind::NotEveOnly, "reduce needs an Eve-only arena");
  const auto verdict = check_positional(game.condition, monoid_cap());
  if (!verdict.positional) {
    std::cerr << "condition is not positional (property " << verdict.failed_property
              << " fails, witness " << witness_to_json(*verdict.witness).dump() << ")\n";
    return kRefuted;
  }
  const auto solved = solve_game(game);
  const auto reduced = reduce_to_positional(game, solved.strategy, solved.initial_states);
  const auto& s = reduced.strategy;
  const bool verified = s.positional() && verify_strategy(game, s, reduced.initial_states);

  Json choices = Json::object();
  std::string text;
  for (MemoryState m : reduced.initial_states) {
    const auto& e = s.edges[s.out_edges()[m].front()];
    const auto& name = game.arena.vertex(s.sigma[m]).name;
    choices[name] = std::string(1, e.letter);
  }
  // Report every memory state of the positional strategy, in vertex order.
  std::vector<std::pair<VertexId, MemoryState>> by_vertex;
  for (MemoryState m = 0; m < s.num_states; ++m) by_vertex.emplace_back(s.sigma[m], m);
  std::sort(by_vertex.begin(), by_vertex.end());
  for (const auto& [v, m] : by_vertex) {
    const auto& e = s.edges[s.out_edges()[m].front()];
    text += game.arena.vertex(v).name + ": " + e.letter + " -> " + game.arena.vertex(s.sigma[e.dst]).name + "\n";
  }
  text += "memory " + std::to_string(reduced.memory_before) + " -> " + std::to_string(s.memory()) +
          " after " + std::to_string(reduced.merges.size()) + " merge(s)\n";
  text += verified ? "verified\n" : "NOT verified\n";
  out.emit(Json{{"choices", choices},
                {"merges", reduced.merges.size()},
                {"memory_before", reduced.memory_before},
                {"verified", verified}},
           text);
  return verified ? kHolds : kRefuted;
}

int cmd_selftest(const std::string& dpa_file, const SelftestOptions& options) {
  const Dpa a = load_dpa(dpa_file);
  const auto report = run_selftest(a, options);
  std::cout << report.text;
  return report.passed ? kHolds : kRefuted;
}

int cmd_gadget(const std::string& dpa_file, const std::string& witness_text, const Output& out) {
  const Dpa a = load_dpa(dpa_file);
  Json parsed;
  try {
    parsed = Json::parse(witness_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidWitness, e.what());
  }
  const auto witness = witness_from_json(parsed, a.alphabet());
  const auto gadget = gadget_from_witness(witness, a.alphabet());
  const auto c = certify_gadget(a, witness);
  out.emit(Json{{"arena", write_arena(gadget.arena)},
                {"start", gadget.arena.vertex(gadget.start).name},
                {"eve_wins", c.won},
                {"positional_win", c.positional_win},
                {"certified", c.certified()}},
           write_arena(gadget.arena) + "# start " + gadget.arena.vertex(gadget.start).name +
               "\n# eve wins: " + (c.won ? "yes" : "no") +
               ", positional win: " + (c.positional_win ? "yes" : "no") + "\n" +
               (c.certified() ? "certified\n" : "not certified\n"));
  return c.certified() ? kHolds : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positionality of omega-regular languages given as deterministic parity automata"};
  app.require_subcommand(1);

  Output out;
  std::string dpa_file, arena_file, first, second;
  SelftestOptions options;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", out.json, "machine-readable output"); };

  auto* check = app.add_subcommand("check", "decide positionality, report a refuting witness");
  check->add_option("dpa", dpa_file, "automaton file")->required();
  add_json(check);

  auto* member_cmd = app.add_subcommand("member", "membership of a lasso prefix:period");
  member_cmd->add_option("dpa", dpa_file)->required();
  member_cmd->add_option("lasso", first)->required();
  add_json(member_cmd);

  auto* compare = app.add_subcommand("compare", "residual preorder between two lassos");
  compare->add_option("dpa", dpa_file)->required();
  compare->add_option("left", first)->required();
  compare->add_option("right", second)->required();
  add_json(compare);

  auto* include = app.add_subcommand("include", "is L(p) included in L(q)?");
  include->add_option("dpa", dpa_file)->required();
  include->add_option("p", first)->required();
  include->add_option("q", second)->required();
  add_json(include);

  auto* solve = app.add_subcommand("solve", "winning region and finite-memory strategy");
  solve->add_option("dpa", dpa_file)->required();
  solve->add_option("arena", arena_file)->required();
  add_json(solve);

  auto* reduce = app.add_subcommand("reduce", "positional strategy on an Eve-only arena");
  reduce->add_option("dpa", dpa_file)->required();
  reduce->add_option("arena", arena_file)->required();
  add_json(reduce);

  auto* selftest = app.add_subcommand("selftest", "certify the verdict constructively");
  selftest->add_option("dpa", dpa_file)->required();
  selftest->add_option("--trials", options.trials, "random arenas")->capture_default_str();
  selftest->add_option("--seed", options.seed)->capture_default_str();
  selftest->add_option("--max-vertices", options.max_vertices)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* gadget = app.add_subcommand("gadget", "build and certify the game of a witness");
  gadget->add_option("dpa", dpa_file)->required();
  gadget->add_option("witness", first, "witness JSON as printed by check --json")->required();
  add_json(gadget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*check) return cmd_check(dpa_file, out);
    if (*member_cmd) return cmd_member(dpa_file, first, out);
    if (*compare) return cmd_compare(dpa_file, first, second, out);
    if (*include) return cmd_include(dpa_file, first, second, out);
    if (*solve) return cmd_solve(dpa_file, arena_file, out);
    if (*reduce) return cmd_reduce(dpa_file, arena_file, out);
    if (*selftest) {
      options.monoid_cap = monoid_cap();
      return cmd_selftest(dpa_file, options);
    }
    if (*gadget) return cmd_gadget(dpa_file, first, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return kInputError;
}
