#include "nchopf/presentation_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "nchopf/error.hpp"
#include "nchopf/families.hpp"

namespace nchopf {

namespace {

struct Line {
  int number;
  int column;  // 1-based column of `text` in the source line
  std::string text;
};

struct Entry {
  Line key;
  Line value;
};

struct Section {
  Line header;
  std::vector<Line> lines;
};

[[noreturn]] void fail(const Line& at, const std::string& message, int extra = 0) {
  throw ParseError(at.number, at.column + extra, message);
}

Line trimmed(int number, std::string_view raw, int base_column) {
  std::size_t b = 0, e = raw.size();
  while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
  return {number, base_column + static_cast<int>(b), std::string(raw.substr(b, e - b))};
}

std::map<std::string, Section> split_sections(std::string_view text) {
  static const std::set<std::string> known{"group",      "character",  "eta",       "xi",    "generators",
                                           "precedence", "relations",  "params",    "weights", "basis"};
  std::map<std::string, Section> sections;
  Section* current = nullptr;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    start = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line = trimmed(number, raw, 1);
    if (line.text.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.text.front() == '[') {
      if (line.text.back() != ']') fail(line, "expected ']'", static_cast<int>(line.text.size()));
      Line name = trimmed(number, std::string_view(line.text).substr(1, line.text.size() - 2), line.column + 1);
      if (!known.count(name.text)) fail(name, "unknown section '" + name.text + "'");
      if (sections.count(name.text)) fail(name, "duplicate section '" + name.text + "'");
      current = &sections[name.text];
      current->header = name;
    } else {
      if (!current) fail(line, "content before the first section");
      current->lines.push_back(line);
    }
    if (end == text.size()) break;
  }
  return sections;
}

Entry split_entry(const Line& line, char sep) {
  auto pos = line.text.find(sep);
  if (pos == std::string::npos) fail(line, std::string("expected '") + sep + "'");
  Line key = trimmed(line.number, std::string_view(line.text).substr(0, pos), line.column);
  Line value = trimmed(line.number, std::string_view(line.text).substr(pos + 1), line.column + static_cast<int>(pos) + 1);
  if (key.text.empty()) fail(line, "missing name");
  return {key, value};
}

std::map<std::string, Entry> key_values(const Section& s) {
  std::map<std::string, Entry> out;
  for (const auto& l : s.lines) {
    Entry e = split_entry(l, '=');
    if (out.count(e.key.text)) fail(e.key, "duplicate key '" + e.key.text + "'");
    out.emplace(e.key.text, e);
  }
  return out;
}

// Whitespace-separated tokens with their columns.
std::vector<Line> tokens(const Line& l) {
  std::vector<Line> out;
  std::size_t i = 0;
  const std::string& t = l.text;
  while (i < t.size()) {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    std::size_t b = i;
    while (i < t.size() && !std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    if (b < i) out.push_back({l.number, l.column + static_cast<int>(b), t.substr(b, i - b)});
  }
  return out;
}

Scalar scalar_token(const Line& tok) {
  try {
    return parse_scalar(tok.text);
  } catch (const Error&) {
    fail(tok, "expected a rational number, got '" + tok.text + "'");
  }
}

long integer_token(const Line& tok) {
  Scalar s = scalar_token(tok);
  if (s.get_den() != 1 || !s.get_num().fits_slong_p()) fail(tok, "expected an integer");
  return s.get_num().get_si();
}

std::vector<Scalar> scalar_list(const Entry& e, std::size_t expected) {
  std::vector<Scalar> out;
  for (const auto& t : tokens(e.value)) out.push_back(scalar_token(t));
  if (out.size() != expected)
    fail(e.value, "expected " + std::to_string(expected) + " values, got " + std::to_string(out.size()));
  return out;
}

void check_identifier(const Line& tok) {
  bool ok = !tok.text.empty() && (std::isalpha(static_cast<unsigned char>(tok.text[0])) || tok.text[0] == '_');
  for (char c : tok.text) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
  if (!ok) fail(tok, "invalid name '" + tok.text + "'");
}

ParamTable parse_params(const std::map<std::string, Section>& sections) {
  ParamTable params;
  auto it = sections.find("params");
  if (it == sections.end()) return params;
  for (const auto& [k, e] : key_values(it->second)) {
    check_identifier(e.key);
    params[k] = scalar_token(e.value);
  }
  return params;
}

const Entry& require_key(const std::map<std::string, Entry>& kv, const Section& s, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) fail(s.header, "section [" + s.header.text + "] needs '" + key + "'");
  return it->second;
}

void forbid_keys(const std::map<std::string, Entry>& kv, std::initializer_list<const char*> allowed) {
  for (const auto& [k, e] : kv) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) fail(e.key, "unknown key '" + k + "'");
  }
}

AlgebraPresentation group_mode(const std::map<std::string, Section>& sections, const ParamTable& params) {
  for (const char* s : {"generators", "precedence", "weights", "basis"})
    if (sections.count(s)) fail(sections.at(s).header, std::string("[") + s + "] is not allowed together with [group]");
  const Section& gs = sections.at("group");
  auto gkv = key_values(gs);
  forbid_keys(gkv, {"generators", "g"});
  GroupSpec group;
  for (const auto& t : tokens(require_key(gkv, gs, "generators").value)) {
    check_identifier(t);
    group.generators.push_back(t.text);
  }
  const Entry& ge = require_key(gkv, gs, "g");
  for (const auto& t : tokens(ge.value)) {
    long e = integer_token(t);
    if (e < -64 || e > 64) fail(t, "exponent out of range [-64, 64]");
    group.g.push_back(e);
  }
  try {
    group.validate();
  } catch (const Error& err) {
    fail(ge.value, err.what());
  }
  const std::size_t n = group.rank();

  std::vector<Scalar> chi_values(n, Scalar(1));
  if (auto it = sections.find("character"); it != sections.end()) {
    auto kv = key_values(it->second);
    forbid_keys(kv, {"values"});
    chi_values = scalar_list(require_key(kv, it->second, "values"), n);
  }
  auto es = sections.find("eta");
  if (es == sections.end()) fail(gs.header, "[group] needs an [eta] section");
  auto ekv = key_values(es->second);
  forbid_keys(ekv, {"values"});
  auto eta_values = scalar_list(require_key(ekv, es->second, "values"), n);

  auto xs = sections.find("xi");
  if (xs == sections.end()) fail(gs.header, "[group] needs an [xi] section");
  auto xkv = key_values(xs->second);
  forbid_keys(xkv, {"mode", "values"});
  const Entry& mode = require_key(xkv, xs->second, "mode");
  std::optional<std::vector<Scalar>> xi_values;
  if (auto it = xkv.find("values"); it != xkv.end()) xi_values = scalar_list(it->second, n);

  YDTriple triple{group, Character(chi_values), TwistedDerivation(Character(chi_values), eta_values)};
  Scalar lambda = 0;
  bool has_lambda = params.count("lambda") > 0;
  if (has_lambda) lambda = params.at("lambda");
  if (mode.value.text == "additive") {
    if (!xi_values) fail(mode.value, "additive mode needs xi values");
    return make_U_xi(triple, XiMap::additive(triple.eta, *xi_values), lambda);
  }
  if (mode.value.text == "jordanian") {
    if (xi_values) XiMap::jordanian(triple.eta, *xi_values);
    if (has_lambda) fail(mode.value, "the Jordanian family takes no lambda");
    return make_ujor_D(triple);
  }
  if (mode.value.text == "free") {
    if (!xi_values) fail(mode.value, "free mode needs xi values");
    if (has_lambda) fail(mode.value, "the free family takes no lambda");
    return make_wujor_D(triple, *xi_values);
  }
  fail(mode.value, "mode must be additive, jordanian or free");
}

Word tag_word(const Line& tok, const Alphabet& a) {
  if (tok.text == "1") return Word();
  Word w;
  std::size_t start = 0;
  while (start <= tok.text.size()) {
    std::size_t end = tok.text.find('*', start);
    if (end == std::string::npos) end = tok.text.size();
    std::string name = tok.text.substr(start, end - start);
    auto id = a.find(name);
    if (!id)
      throw ParseError(tok.number, tok.column + static_cast<int>(start), "unknown letter '" + name + "'",
                       ErrorKind::UnknownLetter);
    w += Word::letter(*id);
    start = end + 1;
  }
  return w;
}

AlgebraPresentation raw_mode(const std::map<std::string, Section>& sections) {
  auto gen = sections.find("generators");
  if (gen == sections.end()) throw ParseError(1, 1, "missing [generators] section");
  for (const char* s : {"character", "eta", "xi"})
    if (sections.count(s)) fail(sections.at(s).header, std::string("[") + s + "] needs a [group] section");

  auto alphabet = std::make_shared<Alphabet>();
  AlgebraPresentation p;
  p.label = "file";
  for (const auto& l : gen->second.lines) {
    Entry e = split_entry(l, ':');
    check_identifier(e.key);
    if (alphabet->find(e.key.text)) fail(e.key, "duplicate letter '" + e.key.text + "'");
    auto toks = tokens(e.value);
    if (toks.empty()) fail(e.value, "missing role");
    const std::string& role = toks[0].text;
    auto arity = [&](std::size_t k) {
      if (toks.size() != k + 1) fail(toks[0], "role '" + role + "' takes " + std::to_string(k) + " argument(s)");
    };
    if (role == "plain") {
      arity(0);
      alphabet->add_plain(e.key.text);
    } else if (role == "group") {
      arity(0);
      alphabet->add_group(e.key.text);
    } else if (role == "inverse") {
      arity(1);
      auto of = alphabet->find(toks[1].text);
      if (!of) throw ParseError(toks[1].number, toks[1].column, "unknown letter '" + toks[1].text + "'",
                                ErrorKind::UnknownLetter);
      if (alphabet->role(*of).kind != RoleKind::GroupLike || alphabet->role(*of).inverse)
        fail(toks[1], "'" + toks[1].text + "' is not a group letter without inverse");
      LetterId id = alphabet->add_inverse(e.key.text, *of);
      p.group_generators.emplace_back(*of, id);
    } else if (role == "skew") {
      arity(2);
      Word left = tag_word(toks[1], *alphabet), right = tag_word(toks[2], *alphabet);
      if (!alphabet->is_group_word(left) || !alphabet->is_group_word(right))
        fail(toks[1], "skew tags must be words in group letters");
      alphabet->add_skew(e.key.text, left, right);
    } else {
      fail(toks[0], "unknown role '" + role + "'");
    }
  }
  for (std::size_t i = 0; i < alphabet->size(); ++i) {
    const Role& r = alphabet->role(static_cast<LetterId>(i));
    if (r.kind == RoleKind::GroupLike && !r.inverse)
      fail(gen->second.header, "group letter '" + alphabet->name(static_cast<LetterId>(i)) + "' has no inverse");
  }

  auto prec = sections.find("precedence");
  if (prec == sections.end()) fail(gen->second.header, "missing [precedence] section");
  if (prec->second.lines.size() != 1) fail(prec->second.header, "[precedence] takes exactly one line");
  const Line& pl = prec->second.lines.front();
  std::vector<LetterId> order;
  std::size_t start = 0;
  while (start <= pl.text.size()) {
    std::size_t end = pl.text.find('>', start);
    if (end == std::string::npos) end = pl.text.size();
    Line name = trimmed(pl.number, std::string_view(pl.text).substr(start, end - start), pl.column + static_cast<int>(start));
    auto id = alphabet->find(name.text);
    if (!id)
      throw ParseError(name.number, name.column, "unknown letter '" + name.text + "'", ErrorKind::UnknownLetter);
    for (LetterId o : order)
      if (o == *id) fail(name, "letter listed twice");
    order.push_back(*id);
    start = end + 1;
  }
  if (order.size() != alphabet->size()) fail(pl, "precedence must list every letter");

  std::vector<int> weights(alphabet->size());
  for (std::size_t i = 0; i < weights.size(); ++i)
    weights[i] = MonomialOrder::default_weight(alphabet->role(static_cast<LetterId>(i)));
  if (auto ws = sections.find("weights"); ws != sections.end()) {
    for (const auto& [k, e] : key_values(ws->second)) {
      auto id = alphabet->find(k);
      if (!id) throw ParseError(e.key.number, e.key.column, "unknown letter '" + k + "'", ErrorKind::UnknownLetter);
      long w = integer_token(e.value);
      if (w < 1 || w > 1000) fail(e.value, "weight must be between 1 and 1000");
      weights[*id] = static_cast<int>(w);
    }
  }
  p.order = MonomialOrder(*alphabet, order, weights);

  if (auto bs = sections.find("basis"); bs != sections.end()) {
    auto kv = key_values(bs->second);
    forbid_keys(kv, {"g", "letters"});
    SkewBasis basis;
    const Entry& g = require_key(kv, bs->second, "g");
    basis.g = tag_word(g.value, *alphabet);
    for (const auto& t : tokens(require_key(kv, bs->second, "letters").value)) {
      auto id = alphabet->find(t.text);
      if (!id) throw ParseError(t.number, t.column, "unknown letter '" + t.text + "'", ErrorKind::UnknownLetter);
      basis.letters.push_back(*id);
    }
    p.basis = basis;
  }
  // Inverse letters are tied to their generator by g g_inv = g_inv g = 1.
  for (const auto& [g, gi] : p.group_generators) {
    p.relations.push_back(Polynomial::of(Word{g, gi}) - Polynomial::one());
    p.relations.push_back(Polynomial::of(Word{gi, g}) - Polynomial::one());
  }
  p.alphabet = std::move(alphabet);
  return p;
}

}  // namespace

ParamTable param_table(const AlgebraPresentation& p) {
  ParamTable t;
  for (const auto& [k, v] : p.params) t[k] = v;
  return t;
}

AlgebraPresentation parse_presentation(std::string_view text) {
  auto sections = split_sections(text);
  ParamTable params = parse_params(sections);
  AlgebraPresentation p = sections.count("group") ? group_mode(sections, params) : raw_mode(sections);
  for (const auto& [k, v] : params)
    if (!p.param(k)) p.params.emplace_back(k, v);
  if (auto rs = sections.find("relations"); rs != sections.end()) {
    for (const auto& l : rs->second.lines) {
      auto eq = l.text.find('=');
      Polynomial r;
      if (eq == std::string::npos) {
        r = parse_expression(l.text, *p.alphabet, params, l.number, l.column - 1);
      } else {
        r = parse_expression(std::string_view(l.text).substr(0, eq), *p.alphabet, params, l.number, l.column - 1) -
            parse_expression(std::string_view(l.text).substr(eq + 1), *p.alphabet, params, l.number,
                             l.column + static_cast<int>(eq));
      }
      if (r.is_zero()) fail(l, "relation is identically zero");
      p.relations.push_back(std::move(r));
    }
  }
  if (p.relations.empty() && !sections.count("group")) throw ParseError(1, 1, "no relations given");
  return p;
}

AlgebraPresentation named_presentation(std::string_view name, const ParamTable& params) {
  auto get = [&](const char* key, Scalar fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  auto only = [&](std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : params) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || k == a;
      if (!ok) throw Error(ErrorKind::InvalidArgument, "unknown parameter '" + k + "' for " + std::string(name));
    }
  };
  if (name == "wujor") {
    only({});
    return make_wujor();
  }
  if (name == "ujor_lambda") {
    only({"lambda"});
    return make_ujor_lambda(get("lambda", 0));
  }
  if (name == "U_xi") {
    only({"lambda", "xi"});
    YDTriple d{GroupSpec::cyclic(), Character::trivial(1), TwistedDerivation::additive({1})};
    return make_U_xi(d, XiMap::additive(d.eta, {get("xi", 0)}), get("lambda", 0));
  }
  if (name == "ujor_D") {
    only({});
    return make_ujor_D({GroupSpec::cyclic(), Character::trivial(1), TwistedDerivation::additive({1})});
  }
  if (name == "ohn") {
    only({"hbar"});
    return make_ohn(get("hbar", 1));
  }
  if (name == "jordan_plane") {
    only({});
    return make_jordan_plane();
  }
  if (name == "example") {
    only({});
    return make_example_indecomposable();
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

AlgebraPresentation load_presentation(const std::string& path_or_name, const ParamTable& params) {
  if (!path_or_name.empty() && path_or_name[0] == '@') return named_presentation(path_or_name.substr(1), params);
  if (!params.empty()) throw Error(ErrorKind::InvalidArgument, "parameters apply only to named families");
  std::ifstream in(path_or_name, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path_or_name + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

}  // namespace nchopf
