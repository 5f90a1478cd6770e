#include "conescope/descriptors.hpp"

#include <algorithm>

#include "conescope/errors.hpp"

namespace conescope {

void require_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw InvalidDescriptor(where + " must be a JSON object");
  for (const auto& item : j.items()) {
    const bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return item.key() == k; });
    if (!ok) throw InvalidDescriptor("unknown key \"" + item.key() + "\" in " + where);
  }
}

namespace {

template <typename T>
T get(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InvalidDescriptor("missing \"" + std::string(key) + "\" in " + where);
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidDescriptor("bad \"" + std::string(key) + "\" in " + where + ": " + e.what());
  }
}

Element parse_element(const GroupModel& m, const Json& j) {
  if (!j.is_string()) throw InvalidDescriptor("words must be strings");
  return m.parse(j.get<std::string>());
}

}  // namespace

GroupModel model_from_json(const Json& j) {
  const std::string where = "group descriptor";
  require_keys(j, {"kind", "rank", "factors"}, where);
  const auto kind = get<std::string>(j, "kind", where);
  if (kind == "free") return GroupModel::free_group(get<int>(j, "rank", where));
  if (kind == "abelian") return GroupModel::free_abelian(get<int>(j, "rank", where));
  if (kind == "klein") return GroupModel::klein_bottle();
  if (kind == "product") {
    const Json& f = j.contains("factors") ? j.at("factors") : Json();
    if (!f.is_array() || f.size() != 2) throw InvalidDescriptor("product needs exactly two factors");
    return GroupModel::direct_product(model_from_json(f[0]), model_from_json(f[1]));
  }
  throw InvalidDescriptor("unknown group kind \"" + kind + "\"");
}

Json model_to_json(const GroupModel& m) {
  Json j;
  switch (m.kind()) {
    case ModelKind::Free:
      j["kind"] = "free";
      j["rank"] = m.rank();
      break;
    case ModelKind::Abelian:
      j["kind"] = "abelian";
      j["rank"] = m.rank();
      break;
    case ModelKind::Klein:
      j["kind"] = "klein";
      break;
    case ModelKind::Product:
      j["kind"] = "product";
      j["factors"] = Json::array({model_to_json(m.factor(0)), model_to_json(m.factor(1))});
      break;
  }
  return j;
}

Order order_from_json(const Json& j, const GroupModel& m) {
  const std::string where = "order descriptor";
  require_keys(j, {"name", "kind", "weights", "leading", "trailing", "leading_factor"}, where);
  const auto kind = get<std::string>(j, "kind", where);
  auto named = [&](Order o) { return j.contains("name") ? o.renamed(get<std::string>(j, "name", where)) : o; };
  if (kind == "magnus") return named(Order::magnus(m));
  if (kind == "klein") return named(Order::klein(m));
  if (kind == "hyperplane") {
    std::vector<SqrtTwoNumber> weights;
    const Json& w = j.contains("weights") ? j.at("weights") : Json();
    if (!w.is_array()) throw InvalidDescriptor("hyperplane needs \"weights\"");
    for (const Json& item : w) {
      if (item.is_number_integer()) {
        weights.push_back({item.get<std::int64_t>(), 0});
      } else if (item.is_array() && item.size() == 2 && item[0].is_number_integer() && item[1].is_number_integer()) {
        weights.push_back({item[0].get<std::int64_t>(), item[1].get<std::int64_t>()});
      } else {
        throw InvalidDescriptor("weights are integers or [p, q] pairs meaning p + q sqrt(2)");
      }
    }
    return named(Order::hyperplane(m, std::move(weights)));
  }
  if (kind == "lex_pair") {
    if (m.kind() != ModelKind::Product) throw ModelMismatch("lex_pair needs a product group");
    const auto lead = j.contains("leading_factor") ? get<std::size_t>(j, "leading_factor", where) : std::size_t{0};
    if (lead > 1) throw InvalidDescriptor("leading_factor must be 0 or 1");
    if (!j.contains("leading") || !j.contains("trailing")) throw InvalidDescriptor("lex_pair needs leading and trailing");
    Order leading = order_from_json(j.at("leading"), m.factor(lead));
    Order trailing = order_from_json(j.at("trailing"), m.factor(1 - lead));
    return named(Order::lex_pair(m, std::move(leading), std::move(trailing), lead));
  }
  throw InvalidDescriptor("unknown order kind \"" + kind + "\"");
}

Json order_to_json(const Order& o) {
  Json j;
  j["name"] = o.name();
  switch (o.kind()) {
    case Order::Kind::Magnus:
      j["kind"] = "magnus";
      break;
    case Order::Kind::Klein:
      j["kind"] = "klein";
      break;
    case Order::Kind::Hyperplane: {
      j["kind"] = "hyperplane";
      Json w = Json::array();
      for (const auto& x : o.weights()) w.push_back(Json::array({x.rational, x.irrational}));
      j["weights"] = std::move(w);
      break;
    }
    case Order::Kind::LexPair:
      j["kind"] = "lex_pair";
      j["leading"] = order_to_json(o.leading());
      j["trailing"] = order_to_json(o.trailing());
      j["leading_factor"] = o.leading_factor();
      break;
    case Order::Kind::Custom:
      j["kind"] = "custom";
      break;
  }
  return j;
}

ConeDfa dfa_from_json(const Json& j) {
  const std::string where = "automaton";
  require_keys(j, {"states", "initial", "accepting", "alphabet", "transitions"}, where);
  const auto names = get<std::vector<std::string>>(j, "states", where);
  const auto alphabet = get<std::string>(j, "alphabet", where);
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i] != static_cast<char>('a' + i)) throw InvalidDescriptor("alphabet must be \"a\", \"ab\", \"abc\", ...");
  }
  const int generators = static_cast<int>(alphabet.size());

  auto index_of = [&](const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw InvalidDescriptor("unknown state \"" + name + "\"");
    return static_cast<ConeDfa::State>(it - names.begin());
  };

  std::vector<bool> accepting(names.size(), false);
  for (const auto& s : get<std::vector<std::string>>(j, "accepting", where)) accepting[index_of(s)] = true;

  const Json& t = j.contains("transitions") ? j.at("transitions") : Json();
  if (!t.is_object()) throw InvalidDescriptor("missing \"transitions\" in automaton");
  std::vector<std::vector<ConeDfa::State>> table(names.size());
  const auto letters = alphabet_letters(generators);
  for (std::size_t s = 0; s < names.size(); ++s) {
    if (!t.contains(names[s])) throw InvalidDescriptor("no transitions for state \"" + names[s] + "\"");
    const Json& row = t.at(names[s]);
    if (!row.is_object() || row.size() != letters.size()) {
      throw InvalidDescriptor("transition function is not total at \"" + names[s] + "\"");
    }
    for (Letter l : letters) {
      const std::string key(1, letter_char(l));
      if (!row.contains(key)) throw InvalidDescriptor("state \"" + names[s] + "\" has no move on " + key);
      table[s].push_back(index_of(row.at(key).get<std::string>()));
    }
  }
  return ConeDfa(names, index_of(get<std::string>(j, "initial", where)), std::move(accepting), generators,
                 std::move(table));
}

Json dfa_to_json(const ConeDfa& d) {
  Json j;
  Json states = Json::array();
  Json accepting = Json::array();
  Json transitions = Json::object();
  std::string alphabet;
  for (int i = 0; i < d.generator_count(); ++i) alphabet.push_back(static_cast<char>('a' + i));
  for (ConeDfa::State s = 0; s < d.state_count(); ++s) {
    states.push_back(d.state_name(s));
    if (d.accepting(s)) accepting.push_back(d.state_name(s));
    Json row = Json::object();
    for (Letter l : d.letters()) row[std::string(1, letter_char(l))] = d.state_name(d.next(s, l));
    transitions[d.state_name(s)] = std::move(row);
  }
  j["states"] = std::move(states);
  j["initial"] = d.state_name(d.initial());
  j["accepting"] = std::move(accepting);
  j["alphabet"] = alphabet;
  j["transitions"] = std::move(transitions);
  return j;
}

Json certificate_to_json(const SwampCertificate& c) {
  Json j;
  j["r"] = c.width;
  j["center"] = to_string(c.center);
  Json swamp = Json::array();
  for (const Element& s : c.swamp) swamp.push_back(to_string(s));
  j["swamp"] = std::move(swamp);
  j["witnesses"] = Json::array({to_string(c.witnesses[0]), to_string(c.witnesses[1])});
  j["verdict"] = to_string(c.verdict);
  return j;
}

SeparationVerdict separation_verdict_from_string(const std::string& s) {
  for (auto v : {SeparationVerdict::CertifiedTree, SeparationVerdict::CertifiedExhaustive, SeparationVerdict::Evidence,
                 SeparationVerdict::NotSeparating}) {
    if (to_string(v) == s) return v;
  }
  throw InvalidDescriptor("unknown verdict \"" + s + "\"");
}

SwampCertificate certificate_from_json(const Json& j, const GroupModel& m) {
  const std::string where = "certificate";
  require_keys(j, {"r", "center", "swamp", "witnesses", "verdict"}, where);
  SwampCertificate c;
  c.width = get<int>(j, "r", where);
  c.center = j.contains("center") ? parse_element(m, j.at("center")) : m.identity();
  const Json& swamp = j.contains("swamp") ? j.at("swamp") : Json();
  if (!swamp.is_array()) throw InvalidDescriptor("certificate needs a \"swamp\" array");
  for (const Json& s : swamp) c.swamp.push_back(parse_element(m, s));
  std::sort(c.swamp.begin(), c.swamp.end(), ShortlexElementLess{});
  const Json& w = j.contains("witnesses") ? j.at("witnesses") : Json();
  if (!w.is_array() || w.size() != 2) throw InvalidDescriptor("certificate needs two witnesses");
  c.witnesses = {parse_element(m, w[0]), parse_element(m, w[1])};
  c.verdict = j.contains("verdict") ? separation_verdict_from_string(get<std::string>(j, "verdict", where))
                                    : SeparationVerdict::Evidence;
  return c;
}

}  // namespace conescope
