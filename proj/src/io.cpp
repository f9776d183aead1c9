#include "posit/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "posit/error.hpp"

namespace posit {
namespace {

using Tokens = std::vector<std::string>;

struct Line {
  std::size_t number;
  Tokens tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Tokens tokens;
    for (std::string t; words >> t;) tokens.push_back(t);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const std::string& why) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line.number) + ": " + why);
}

std::size_t to_number(const Line& line, const std::string& token) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) fail(line, "expected a number, got '" + token + "'");
  return value;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n)
    fail(line, "'" + line.tokens[0] + "' expects " + std::to_string(n - 1) + " argument(s)");
}

void expect_header(const std::vector<Line>& lines, const std::string& kind) {
  if (lines.empty()) throw Error(ErrorKind::ParseError, "empty " + kind + " file");
  const auto& first = lines.front();
  if (first.tokens.size() != 2 || first.tokens[0] != kind || first.tokens[1] != "v1")
    fail(first, "expected header '" + kind + " v1'");
}

Alphabet parse_alphabet(const Line& line) {
  std::vector<char> letters;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    if (line.tokens[i].size() != 1) fail(line, "letters are single characters: '" + line.tokens[i] + "'");
    letters.push_back(line.tokens[i][0]);
  }
  try {
    return Alphabet(std::move(letters));
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

char parse_letter(const Line& line, const std::string& token, const Alphabet& alphabet) {
  if (token.size() != 1 || !alphabet.contains(token[0]))
    throw Error(ErrorKind::UnknownLetter,
                "line " + std::to_string(line.number) + ": '" + token + "' not in alphabet");
  return token[0];
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Dpa parse_dpa(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "dpa");

  std::optional<Alphabet> alphabet;
  std::optional<std::size_t> num_states;
  std::vector<std::string> names;
  std::optional<std::string> initial_token;
  std::vector<std::pair<Line, Tokens>> trans;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& key = line.tokens[0];
    if (key == "alphabet") {
      if (alphabet) fail(line, "alphabet given twice");
      alphabet = parse_alphabet(line);
    } else if (key == "states") {
      expect_arity(line, 2);
      num_states = to_number(line, line.tokens[1]);
      if (*num_states == 0) fail(line, "an automaton needs at least one state");
    } else if (key == "names") {
      names.assign(line.tokens.begin() + 1, line.tokens.end());
    } else if (key == "initial") {
      expect_arity(line, 2);
      initial_token = line.tokens[1];
    } else if (key == "trans") {
      expect_arity(line, 5);
      trans.emplace_back(line, line.tokens);
    } else {
      fail(line, "unknown directive '" + key + "'");
    }
  }
  if (!alphabet) throw Error(ErrorKind::ParseError, "missing 'alphabet'");
  if (!num_states) throw Error(ErrorKind::ParseError, "missing 'states'");
  if (!initial_token) throw Error(ErrorKind::ParseError, "missing 'initial'");
  if (!names.empty() && names.size() != *num_states)
    throw Error(ErrorKind::ParseError, "'names' must list exactly one name per state");

  auto state = [&](const Line& line, const std::string& token) -> StateId {
    for (std::size_t s = 0; s < names.size(); ++s)
      if (names[s] == token) return s;
    const std::size_t s = to_number(line, token);
    if (s >= *num_states) fail(line, "state " + token + " out of range");
    return s;
  };

  const std::size_t k = alphabet->size();
  std::vector<Transition> table(*num_states * k);
  std::vector<char> defined(table.size(), 0);
  for (const auto& [line, t] : trans) {
    const StateId from = state(line, t[1]);
    const std::size_t letter = alphabet->require(parse_letter(line, t[2], *alphabet));
    const StateId to = state(line, t[3]);
    const std::size_t priority = to_number(line, t[4]);
    if (priority > static_cast<std::size_t>(kMaxPriority))
      fail(line, "priority above " + std::to_string(kMaxPriority));
    const std::size_t slot = from * k + letter;
    if (defined[slot]) fail(line, "second transition for state " + t[1] + " and letter " + t[2]);
    defined[slot] = 1;
    table[slot] = {to, static_cast<Priority>(priority)};
  }
  for (std::size_t slot = 0; slot < table.size(); ++slot)
    if (!defined[slot])
      throw Error(ErrorKind::ParseError, "no transition for state " + std::to_string(slot / k) +
                                             " and letter " + alphabet->letter(slot % k));

  const Line initial_line{0, {}};
  const StateId initial = state(initial_line, *initial_token);
  return Dpa(*alphabet, *num_states, initial, std::move(table), std::move(names));
}

Dpa load_dpa(const std::filesystem::path& path) { return parse_dpa(read_file(path)); }

std::string write_dpa(const Dpa& a) {
  std::ostringstream out;
  out << "dpa v1\nalphabet";
  for (char c : a.alphabet().letters()) out << ' ' << c;
  out << "\nstates " << a.num_states() << "\nnames";
  for (StateId s = 0; s < a.num_states(); ++s) out << ' ' << a.state_name(s);
  out << "\ninitial " << a.state_name(a.initial()) << '\n';
  for (StateId s = 0; s < a.num_states(); ++s)
    for (std::size_t i = 0; i < a.alphabet().size(); ++i) {
      const auto& t = a.step(s, i);
      out << "trans " << a.state_name(s) << ' ' << a.alphabet().letter(i) << ' '
          << a.state_name(t.target) << ' ' << t.priority << '\n';
    }
  return out.str();
}

Arena parse_arena(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "arena");

  std::optional<Alphabet> alphabet;
  std::vector<ArenaVertex> vertices;
  std::vector<Line> edge_lines;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& key = line.tokens[0];
    if (key == "alphabet") {
      if (alphabet) fail(line, "alphabet given twice");
      alphabet = parse_alphabet(line);
    } else if (key == "vertex") {
      expect_arity(line, 3);
      const auto& owner = line.tokens[2];
      if (owner != "E" && owner != "A") fail(line, "owner must be E or A");
      vertices.push_back({line.tokens[1], owner == "E" ? Player::Eve : Player::Adam});
    } else if (key == "edge") {
      expect_arity(line, 4);
      edge_lines.push_back(line);
    } else {
      fail(line, "unknown directive '" + key + "'");
    }
  }
  if (!alphabet) throw Error(ErrorKind::ParseError, "missing 'alphabet'");

  auto vertex = [&](const Line& line, const std::string& name) -> VertexId {
    for (VertexId v = 0; v < vertices.size(); ++v)
      if (vertices[v].name == name) return v;
    fail(line, "unknown vertex '" + name + "'");
  };
  std::vector<ArenaEdge> edges;
  for (const auto& line : edge_lines)
    edges.push_back({vertex(line, line.tokens[1]), parse_letter(line, line.tokens[2], *alphabet),
                     vertex(line, line.tokens[3])});
  return Arena(*alphabet, std::move(vertices), std::move(edges));
}

Arena load_arena(const std::filesystem::path& path) { return parse_arena(read_file(path)); }

std::string write_arena(const Arena& arena) {
  std::ostringstream out;
  out << "arena v1\nalphabet";
  for (char c : arena.alphabet().letters()) out << ' ' << c;
  out << '\n';
  for (const auto& v : arena.vertices())
    out << "vertex " << v.name << ' ' << (v.owner == Player::Eve ? 'E' : 'A') << '\n';
  for (const auto& e : arena.edges())
    out << "edge " << arena.vertex(e.src).name << ' ' << e.letter << ' ' << arena.vertex(e.dst).name
        << '\n';
  return out.str();
}

Json witness_to_json(const Witness& witness) {
  struct Visitor {
    Json operator()(const Witness1& w) const {
      return Json{{"property", 1}, {"u", w.u}, {"up", w.u_prime},
                  {"w", w.w.to_string()}, {"wp", w.w_prime.to_string()}};
    }
    Json operator()(const Witness2& w) const {
      return Json{{"property", 2}, {"u", w.u}, {"v", w.v}, {"w", w.w.to_string()}};
    }
    Json operator()(const Witness3& w) const {
      return Json{{"property", 3}, {"u", w.u}, {"v", w.v}, {"vp", w.v_prime}};
    }
  };
  return std::visit(Visitor{}, witness);
}

Witness witness_from_json(const Json& j, const Alphabet& alphabet) {
  try {
    auto word = [&](const char* key) {
      auto w = j.at(key).get<std::string>();
      alphabet.check_word(w);
      return w;
    };
    auto lasso = [&](const char* key) { return parse_lasso(j.at(key).get<std::string>(), alphabet); };
    switch (j.at("property").get<int>()) {
      case 1: return Witness1{word("u"), word("up"), lasso("w"), lasso("wp")};
      case 2: return Witness2{word("u"), word("v"), lasso("w")};
      case 3: return Witness3{word("u"), word("v"), word("vp")};
      default: break;
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidWitness, e.what());
  }
  throw Error(ErrorKind::InvalidWitness, "property must be 1, 2 or 3");
}

}  // namespace posit
