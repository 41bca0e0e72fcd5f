#include "kvrep/io.hpp"

#include <fstream>
#include <sstream>

namespace kvrep {

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& what)
{
  throw ParseError(where + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where)
{
  if (!j.is_object())
    schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    schema(where, std::string("missing key \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where)
{
  if (!j.is_number_integer())
    schema(where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30))
    schema(where, "integer out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j, const std::string& where)
{
  if (!j.is_array())
    schema(where, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k)
    out.push_back(as_int(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

const Json& array_of(const Json& j, std::size_t size, const std::string& where)
{
  if (!j.is_array())
    schema(where, "expected an array");
  if (j.size() != size)
    schema(where, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
  return j;
}

QZ as_qz(const Json& j, const std::string& where)
{
  if (j.is_string()) {
    try {
      return QZ::parse(j.get<std::string>());
    } catch (const InvalidArgument& e) {
      schema(where, e.what());
    }
  }
  if (j.is_number_integer())
    return QZ();
  schema(where, "expected a \"num/den\" string");
}

std::string at(const std::string& where, std::size_t k)
{
  return where + "[" + std::to_string(k) + "]";
}

} // namespace

Json parse_json(const std::string& text)
{
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Json load_json(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

FiniteGroup group_from_json(const Json& j, GroupOptions options)
{
  const int p = as_int(member(j, "order", "group"), "group.order");
  if (p < 1)
    schema("group.order", "must be positive");
  const auto& tj = array_of(member(j, "table", "group"), static_cast<std::size_t>(p), "group.table");
  FiniteGroup::Table table;
  for (std::size_t r = 0; r < tj.size(); ++r) {
    auto row = int_list(tj[r], at("group.table", r));
    if (row.size() != static_cast<std::size_t>(p))
      schema(at("group.table", r), "row of wrong length");
    table.push_back(std::move(row));
  }
  return FiniteGroup(std::move(table), options);
}

Json to_json(const FiniteGroup& g)
{
  return Json{{"order", g.order()}, {"table", g.table()}};
}

AbelianGroup abelian_from_json(const Json& j)
{
  return AbelianGroup(int_list(member(j, "cyclic", "pi1"), "pi1.cyclic"));
}

Json to_json(const AbelianGroup& a)
{
  return Json{{"cyclic", a.cyclic_orders()}};
}

Pi1Action action_from_json(const Json& j, const FiniteGroup& pi0, const AbelianGroup& pi1)
{
  const auto& pj = array_of(member(j, "perms", "action"), static_cast<std::size_t>(pi0.order()), "action.perms");
  std::vector<Perm> perms;
  for (std::size_t k = 0; k < pj.size(); ++k) {
    auto v = int_list(pj[k], at("action.perms", k));
    if (v.size() != static_cast<std::size_t>(pi1.order()))
      schema(at("action.perms", k), "permutation of wrong length");
    perms.emplace_back(std::move(v));
  }
  return Pi1Action(pi0, pi1, std::move(perms));
}

Json to_json(const Pi1Action& a)
{
  Json perms = Json::array();
  for (const auto& p : a.perms())
    perms.push_back(p.images());
  return Json{{"perms", perms}};
}

TwoGroupData two_group_from_json(const Json& j, GroupOptions options)
{
  const auto pi0 = group_from_json(member(j, "pi0", "two_group"), options);
  const auto pi1 = j.contains("pi1") ? abelian_from_json(j["pi1"]) : AbelianGroup();
  const auto action = j.contains("action") ? action_from_json(j["action"], pi0, pi1) : Pi1Action::trivial(pi0, pi1);
  const auto p = static_cast<std::size_t>(pi0.order());
  std::vector<int> alpha(p * p * p, 0);
  if (j.contains("alpha")) {
    const auto& aj = array_of(j["alpha"], p, "alpha");
    for (std::size_t a = 0; a < p; ++a) {
      const auto& bj = array_of(aj[a], p, at("alpha", a));
      for (std::size_t b = 0; b < p; ++b) {
        const auto row = int_list(bj[b], at(at("alpha", a), b));
        if (row.size() != p)
          schema(at(at("alpha", a), b), "row of wrong length");
        for (std::size_t c = 0; c < p; ++c)
          alpha[(a * p + b) * p + c] = row[c];
      }
    }
  }
  return make_two_group(pi0, pi1, action, alpha);
}

Json to_json(const TwoGroupData& t)
{
  const int p = t.p();
  Json alpha = Json::array();
  for (int a = 0; a < p; ++a) {
    Json plane = Json::array();
    for (int b = 0; b < p; ++b) {
      Json row = Json::array();
      for (int c = 0; c < p; ++c)
        row.push_back(t.alpha().at({a, b, c}));
      plane.push_back(row);
    }
    alpha.push_back(plane);
  }
  return Json{{"pi0", to_json(t.pi0())}, {"pi1", to_json(t.pi1())}, {"action", to_json(t.action())}, {"alpha", alpha}};
}

namespace {

Json value_json(const QZModule::Value& v)
{
  if (v.size() == 1)
    return v[0].str();
  Json arr = Json::array();
  for (const auto& x : v)
    arr.push_back(x.str());
  return arr;
}

Json nested(const QZCochain& c, std::vector<int>& prefix)
{
  if (static_cast<int>(prefix.size()) == c.degree())
    return value_json(c.at(prefix));
  Json arr = Json::array();
  for (int g = 0; g < c.group_order(); ++g) {
    prefix.push_back(g);
    arr.push_back(nested(c, prefix));
    prefix.pop_back();
  }
  return arr;
}

void read_nested(const Json& j, QZCochain& c, std::vector<int>& prefix, const std::string& where)
{
  const int rank = c.module().rank();
  if (static_cast<int>(prefix.size()) == c.degree()) {
    auto& v = c.at(prefix);
    if (rank == 1 && !j.is_array()) {
      v[0] = as_qz(j, where);
      return;
    }
    const auto& arr = array_of(j, static_cast<std::size_t>(rank), where);
    for (std::size_t k = 0; k < arr.size(); ++k)
      v[k] = as_qz(arr[k], at(where, k));
    return;
  }
  const auto& arr = array_of(j, static_cast<std::size_t>(c.group_order()), where);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    prefix.push_back(static_cast<int>(k));
    read_nested(arr[k], c, prefix, at(where, k));
    prefix.pop_back();
  }
}

} // namespace

Json to_json(const QZCochain& c)
{
  std::vector<int> prefix;
  return nested(c, prefix);
}

QZCochain qz_cochain_from_json(const Json& j, std::shared_ptr<const QZModule> module, int degree)
{
  QZCochain c(std::move(module), degree);
  std::vector<int> prefix;
  read_nested(j, c, prefix, "c");
  return c;
}

RepQuadruple quadruple_from_json(const Json& j, TwoGroupPtr t, GroupOptions options)
{
  if (!t) {
    if (!j.is_object() || !j.contains("two_group"))
      schema("quadruple", "no 2-group given and none embedded under \"two_group\"");
    t = std::make_shared<const TwoGroupData>(two_group_from_json(j["two_group"], options));
  }
  const int n = as_int(member(j, "n", "quadruple"), "quadruple.n");
  if (n < 0)
    schema("quadruple.n", "must be nonnegative");
  const auto p = static_cast<std::size_t>(t->p());
  const auto& rj = array_of(member(j, "rho", "quadruple"), p, "rho");
  std::vector<Perm> images;
  for (std::size_t k = 0; k < p; ++k) {
    auto v = int_list(rj[k], at("rho", k));
    if (v.size() != static_cast<std::size_t>(n))
      schema(at("rho", k), "permutation of wrong length");
    images.emplace_back(std::move(v));
  }
  PermHom rho(n, std::move(images));
  const auto& bj = array_of(member(j, "beta", "quadruple"), static_cast<std::size_t>(n), "beta");
  std::vector<Character> beta;
  for (std::size_t k = 0; k < bj.size(); ++k) {
    auto exps = int_list(bj[k], at("beta", k));
    if (exps.size() != t->pi1().cyclic_orders().size())
      schema(at("beta", k), "character of wrong length");
    beta.push_back(Character{std::move(exps)});
  }
  auto mod = coefficient_module(*t, rho);
  std::optional<QZCochain> c;
  if (j.contains("c"))
    c = qz_cochain_from_json(j["c"], mod, 2);
  // Out-of-range exponents are a mathematical error, reported by validate.
  RepQuadruple q{t, n, rho, std::move(beta), c ? *c : QZCochain(mod, 2)};
  return q;
}

Json to_json(const RepQuadruple& q, bool embed_two_group)
{
  Json rho = Json::array();
  for (const auto& p : q.rho.images())
    rho.push_back(p.images());
  Json beta = Json::array();
  for (const auto& chi : q.beta)
    beta.push_back(chi.exps);
  // c always as p x p x n arrays, also for n = 1.
  Json c = Json::array();
  for (int a = 0; a < q.c.group_order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < q.c.group_order(); ++b) {
      Json v = Json::array();
      for (const auto& x : q.c.at({a, b}))
        v.push_back(x.str());
      row.push_back(v);
    }
    c.push_back(row);
  }
  Json out{{"n", q.n}, {"rho", rho}, {"beta", beta}, {"c", c}};
  if (embed_two_group)
    out["two_group"] = to_json(*q.two_group);
  return out;
}

Json to_json(const HomReport& r)
{
  Json orbits = Json::array();
  for (const auto& o : r.orbits) {
    Json points = Json::array();
    for (int pt : o.points)
      points.push_back(Json::array({pt / r.source_n, pt % r.source_n}));
    Json rec{{"representative", Json::array({o.representative.first, o.representative.second})},
             {"size", o.points.size()},
             {"points", points},
             {"stabilizer", o.stabilizer},
             {"is_torsor", o.is_torsor}};
    if (o.zhat) {
      rec["zhat"] = to_json(*o.zhat);
      rec["zregular_count"] = o.zregular_count;
    }
    orbits.push_back(rec);
  }
  return Json{{"source_n", r.source_n}, {"target_n", r.target_n}, {"orbits", orbits}, {"total_rank", r.total_rank}};
}

Json to_json(const ValidationReport& r)
{
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    const char* status = c.status == CheckStatus::passed ? "pass" : c.status == CheckStatus::failed ? "fail" : "skipped";
    Json e{{"name", c.name}, {"status", status}};
    if (!c.witness.empty())
      e["witness"] = c.witness;
    if (!c.detail.empty())
      e["detail"] = c.detail;
    checks.push_back(e);
  }
  return Json{{"ok", r.ok()}, {"checks", checks}};
}

} // namespace kvrep
