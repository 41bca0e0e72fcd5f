#include "kvrep/cli.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kvrep/enumerate.hpp"
#include "kvrep/io.hpp"

namespace kvrep::cli {

namespace {

struct Config
{
  bool json = false;
  bool both = false;
  bool allow_unchecked = false;
  int max_n = 6;
  int max_order = 24;
  int max_classes = 20000;
  std::string two_group_path;
  std::vector<std::string> files;
};

/// Math failure surfaced by a command after it has printed its report.
struct Fail
{
};

class Runner
{
public:
  Runner(const Config& cfg, std::ostream& out, const Hooks& hooks) : cfg_(cfg), out_(out), hooks_(hooks) {}

  int validate();
  int regular();
  int hom_rank_cmd();
  int orbits_cmd();
  int zregular();
  int equiv();
  int enumerate();
  int universal_check_cmd();
  int basis_endomega();

private:
  GroupOptions group_options() const
  {
    GroupOptions o;
    o.allow_unchecked = cfg_.allow_unchecked;
    return o;
  }

  TwoGroupPtr load_two_group(const std::string& path) const
  {
    return std::make_shared<const TwoGroupData>(two_group_from_json(load_json(path), group_options()));
  }

  TwoGroupPtr shared_two_group() const
  {
    if (cfg_.two_group_path.empty())
      return nullptr;
    return load_two_group(cfg_.two_group_path);
  }

  RepQuadruple load_quadruple(const std::string& path, const TwoGroupPtr& t) const
  {
    const auto j = load_json(path);
    auto q = quadruple_from_json(j, t, group_options());
    if (t && j.is_object() && j.contains("two_group") && !(two_group_from_json(j["two_group"], group_options()) == *t))
      throw InvalidArgument(path + ": embedded 2-group differs from --two-group");
    return q;
  }

  /// Loads and validates; prints the report and fails when invalid.
  RepQuadruple load_valid(const std::string& path, const TwoGroupPtr& t)
  {
    auto q = load_quadruple(path, t);
    const auto report = kvrep::validate(q);
    if (!report.ok()) {
      out_ << "invalid quadruple in " << path << "\n";
      print(report);
      throw Fail{};
    }
    return q;
  }

  void print(const ValidationReport& r);
  void print_report_tsv(const HomReport& r, bool with_z);

  const Config& cfg_;
  std::ostream& out_;
  const Hooks& hooks_;
};

std::string join(const std::vector<int>& v, const char* sep = ",")
{
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k)
      s += sep;
    s += std::to_string(v[k]);
  }
  return s;
}

std::string pair_str(int a, int b)
{
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void Runner::print(const ValidationReport& r)
{
  if (cfg_.json) {
    out_ << to_json(r).dump(2) << "\n";
    return;
  }
  out_ << "check\tstatus\twitness\n";
  for (const auto& c : r.checks) {
    const char* st = c.status == CheckStatus::passed ? "pass" : c.status == CheckStatus::failed ? "FAIL" : "skipped";
    out_ << c.name << "\t" << st << "\t" << join(c.witness);
    if (!c.detail.empty())
      out_ << "\t" << c.detail;
    out_ << "\n";
  }
  out_ << "result\t" << (r.ok() ? "ok" : "invalid") << "\n";
}

int Runner::validate()
{
  const auto& path = cfg_.files.at(0);
  const auto j = load_json(path);
  const bool is_two_group = j.is_object() && j.contains("pi0");
  if (!is_two_group) {
    std::optional<RepQuadruple> q;
    ValidationReport report;
    try {
      q = load_quadruple(path, shared_two_group());
    } catch (const InvalidArgument& e) {
      report.checks.push_back(Check{"shape", CheckStatus::failed, {}, e.what()});
    }
    if (q)
      report = kvrep::validate(*q);
    print(report);
    return report.ok() ? ok : math_failure;
  }

  // 2-group file: one check per component, stopping at the first failure.
  ValidationReport report;
  auto run_check = [&](const char* name, auto&& fn) {
    if (!report.ok())
      report.checks.push_back(Check{name, CheckStatus::skipped, {}, {}});
    else
      try {
        fn();
        report.checks.push_back(Check{name, CheckStatus::passed, {}, {}});
      } catch (const NotNormalized& e) {
        report.checks.push_back(Check{name, CheckStatus::failed, e.position(), e.what()});
      } catch (const NotACocycle& e) {
        report.checks.push_back(Check{name, CheckStatus::failed, e.witness(), e.what()});
      } catch (const InvalidArgument& e) {
        report.checks.push_back(Check{name, CheckStatus::failed, {}, e.what()});
      } catch (const TooLarge& e) {
        report.checks.push_back(Check{name, CheckStatus::failed, {}, e.what()});
      }
  };
  std::optional<FiniteGroup> pi0;
  AbelianGroup pi1;
  run_check("pi0", [&] { pi0 = group_from_json(j.at("pi0"), group_options()); });
  run_check("pi1", [&] {
    if (j.contains("pi1"))
      pi1 = abelian_from_json(j["pi1"]);
  });
  run_check("action", [&] {
    if (j.contains("action"))
      action_from_json(j["action"], *pi0, pi1);
  });
  run_check("alpha", [&] { two_group_from_json(j, group_options()); });
  print(report);
  return report.ok() ? ok : math_failure;
}

int Runner::regular()
{
  const auto t = load_two_group(cfg_.files.at(0));
  out_ << to_json(regular_rep(t), true).dump(2) << "\n";
  return ok;
}

void Runner::print_report_tsv(const HomReport& r, bool with_z)
{
  out_ << "rep\tsize\tstabilizer\ttorsor";
  if (with_z)
    out_ << "\tzregular";
  out_ << "\n";
  for (const auto& o : r.orbits) {
    out_ << pair_str(o.representative.first, o.representative.second) << "\t" << o.points.size() << "\t"
         << o.stabilizer.size() << "\t" << (o.is_torsor ? "yes" : "no");
    if (with_z)
      out_ << "\t" << o.zregular_count;
    out_ << "\n";
  }
}

int Runner::hom_rank_cmd()
{
  const auto t = shared_two_group();
  const auto q1 = load_valid(cfg_.files.at(0), t);
  const auto q2 = load_valid(cfg_.files.at(1), t);
  if (!(*q1.two_group == *q2.two_group)) {
    out_ << "error\tquadruples are over different 2-groups\n";
    return math_failure;
  }
  const auto fwd = hom_rank(q1, q2);
  std::optional<HomReport> rev;
  if (cfg_.both)
    rev = hom_rank(q2, q1);
  const bool symmetric = !rev || rev->total_rank == fwd.total_rank;
  if (cfg_.json) {
    Json j = to_json(fwd);
    if (rev)
      j = Json{{"forward", j}, {"reverse", to_json(*rev)}, {"symmetric", symmetric}};
    out_ << j.dump(2) << "\n";
  } else {
    print_report_tsv(fwd, true);
    out_ << "total_rank\t" << fwd.total_rank << "\n";
    if (rev) {
      out_ << "reverse_total_rank\t" << rev->total_rank << "\n";
      out_ << "symmetric\t" << (symmetric ? "yes" : "no") << "\n";
    }
  }
  return symmetric ? ok : math_failure;
}

int Runner::orbits_cmd()
{
  const auto t = shared_two_group();
  const auto q1 = load_valid(cfg_.files.at(0), t);
  const auto q2 = load_valid(cfg_.files.at(1), t);
  HomReport r;
  r.source_n = q1.n;
  r.target_n = q2.n;
  r.orbits = intertwining_orbits(q1, q2);
  if (cfg_.json) {
    Json j = to_json(r);
    j.erase("total_rank");
    out_ << j.dump(2) << "\n";
  } else {
    print_report_tsv(r, false);
    out_ << "orbits\t" << r.orbits.size() << "\n";
  }
  return ok;
}

int Runner::zregular()
{
  const auto j = load_json(cfg_.files.at(0));
  if (!j.is_object() || !j.contains("group") || !j.contains("z"))
    throw ParseError("zregular input needs \"group\" and \"z\"");
  auto g = std::make_shared<const FiniteGroup>(group_from_json(j["group"], group_options()));
  const auto z = qz_cochain_from_json(j["z"], std::make_shared<const QZModule>(QZModule::trivial(g, 1)), 2);
  const int count = zregular_count(*g, z);
  const auto classes = conjugacy_classes(*g);
  if (cfg_.json) {
    Json arr = Json::array();
    for (const auto& c : classes)
      arr.push_back(Json{{"representative", c.representative}, {"size", c.members.size()},
                         {"regular", is_zregular(*g, z, c.representative)}});
    out_ << Json{{"classes", arr}, {"count", count}}.dump(2) << "\n";
  } else {
    out_ << "class\tsize\tregular\n";
    for (const auto& c : classes)
      out_ << c.representative << "\t" << c.members.size() << "\t"
           << (is_zregular(*g, z, c.representative) ? "yes" : "no") << "\n";
    out_ << "count\t" << count << "\n";
  }
  return ok;
}

int Runner::equiv()
{
  const auto t = shared_two_group();
  const auto q1 = load_valid(cfg_.files.at(0), t);
  const auto q2 = load_valid(cfg_.files.at(1), t);
  const auto sigma = equivalent(q1, q2);
  if (cfg_.json) {
    Json j{{"equivalent", sigma.has_value()}};
    if (sigma)
      j["sigma"] = sigma->images();
    out_ << j.dump(2) << "\n";
  } else {
    out_ << "equivalent\t" << (sigma ? "yes" : "no") << "\n";
    if (sigma)
      out_ << "sigma\t" << join(sigma->images()) << "\n";
  }
  return sigma ? ok : math_failure;
}

int Runner::enumerate()
{
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(cfg_.files.at(1), &used);
    if (used != cfg_.files[1].size() || n < 0)
      throw std::invalid_argument("n");
  } catch (const std::logic_error&) {
    throw ParseError("dimension must be a nonnegative integer, got \"" + cfg_.files.at(1) + "\"");
  }
  const auto t = load_two_group(cfg_.files.at(0));
  EnumerationBounds b;
  b.max_n = cfg_.max_n;
  b.max_order = cfg_.max_order;
  b.max_candidates = cfg_.max_classes;
  const auto reps = enumerate_reps(t, n, b);
  if (cfg_.json) {
    Json arr = Json::array();
    for (const auto& q : reps)
      arr.push_back(to_json(q));
    out_ << Json{{"n", n}, {"count", reps.size()}, {"classes", arr}}.dump(2) << "\n";
  } else {
    out_ << "class\trho\tbeta\tc_zero\n";
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const auto& q = reps[k];
      std::string rho, beta;
      for (const auto& p : q.rho.images())
        rho += (rho.empty() ? "" : " ") + join(p.images());
      for (const auto& chi : q.beta)
        beta += (beta.empty() ? "" : " ") + ("(" + join(chi.exps) + ")");
      out_ << k << "\t" << (rho.empty() ? "-" : rho) << "\t" << (beta.empty() ? "-" : beta) << "\t"
           << (q.c.is_zero() ? "yes" : "no") << "\n";
    }
    out_ << "count\t" << reps.size() << "\n";
  }
  return ok;
}

int Runner::universal_check_cmd()
{
  // Either REP D or TWO_GROUP REP D.
  TwoGroupPtr t = shared_two_group();
  std::size_t k = 0;
  if (cfg_.files.size() == 3)
    t = load_two_group(cfg_.files[k++]);
  const auto q = load_valid(cfg_.files.at(k), t);
  std::vector<int> d;
  {
    std::stringstream ss(cfg_.files.at(k + 1));
    std::string item;
    while (std::getline(ss, item, ','))
      try {
        std::size_t used = 0;
        d.push_back(std::stoi(item, &used));
        if (used != item.size())
          throw ParseError("bad multiplicity \"" + item + "\"");
      } catch (const std::logic_error&) {
        throw ParseError("bad multiplicity \"" + item + "\"");
      }
  }
  if (static_cast<int>(d.size()) != q.n) {
    out_ << "error\td has " << d.size() << " entries, the representation has dimension " << q.n << "\n";
    return math_failure;
  }
  const auto back = universal_roundtrip(d, q, hooks_.eval);
  const bool pass = back == d;
  if (cfg_.json)
    out_ << Json{{"d", d}, {"roundtrip", back}, {"pass", pass}}.dump(2) << "\n";
  else
    out_ << "d\t" << join(d) << "\nroundtrip\t" << join(back) << "\nresult\t" << (pass ? "pass" : "FAIL") << "\n";
  return pass ? ok : math_failure;
}

int Runner::basis_endomega()
{
  const auto q = load_valid(cfg_.files.at(0), shared_two_group());
  const auto& t = *q.two_group;
  const auto chars = dual_group(t.pi1());
  Json arr = Json::array();
  if (!cfg_.json)
    out_ << "chi\tg\ti\timage\n";
  for (const auto& chi : chars)
    for (int g = 0; g < t.p(); ++g)
      for (int i = 0; i < q.n; ++i) {
        const auto img = end_omega_basis_component(chi, g, q, i);
        if (cfg_.json) {
          Json e{{"chi", chi.exps}, {"g", g}, {"i", i}};
          e["image"] = img ? Json(*img) : Json(nullptr);
          arr.push_back(e);
        } else {
          out_ << "(" << join(chi.exps) << ")\t" << g << "\t" << i << "\t" << (img ? std::to_string(*img) : "-") << "\n";
        }
      }
  const int rank = t.p() * t.q();
  if (cfg_.json)
    out_ << Json{{"components", arr}, {"rank", rank}}.dump(2) << "\n";
  else
    out_ << "rank\t" << rank << "\n";
  return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks)
{
  Config cfg;
  CLI::App app{"Classifying data and invariants of 2-group representations in 2-vector spaces", "kvrep"};
  app.require_subcommand(1);
  app.fallthrough();
  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--json", cfg.json, "JSON output");
  bool tsv = false;
  fmt->add_flag("--tsv", tsv, "tab-separated output (default)");
  fmt->require_option(0, 1);
  app.add_flag("--allow-unchecked", cfg.allow_unchecked, "accept groups above the associativity check bound");
  app.add_option("--two-group", cfg.two_group_path, "2-group file for quadruple inputs");
  app.add_option("--max-n", cfg.max_n, "enumeration bound on n")->check(CLI::PositiveNumber);
  app.add_option("--max-order", cfg.max_order, "enumeration bound on |pi0|")->check(CLI::PositiveNumber);
  app.add_option("--max-classes", cfg.max_classes, "enumeration bound on candidate classes")->check(CLI::PositiveNumber);

  auto files = [&](CLI::App* sub, int count, const char* what) {
    sub->add_option("files", cfg.files, what)->required()->expected(count);
  };
  auto* v = app.add_subcommand("validate", "check a 2-group or quadruple file");
  files(v, 1, "input file");
  auto* r = app.add_subcommand("regular", "regular representation of a 2-group");
  files(r, 1, "2-group file");
  auto* h = app.add_subcommand("hom-rank", "intertwining number of two quadruples");
  files(h, 2, "source and target quadruples");
  h->add_flag("--both", cfg.both, "also compute the reverse direction");
  auto* o = app.add_subcommand("orbits", "intertwining orbits of two quadruples");
  files(o, 2, "source and target quadruples");
  auto* z = app.add_subcommand("zregular", "z-regular conjugacy classes");
  files(z, 1, "file with \"group\" and \"z\"");
  auto* e = app.add_subcommand("equiv", "equivalence test for two quadruples");
  files(e, 2, "two quadruples");
  auto* en = app.add_subcommand("enumerate", "inequivalent representations of dimension n");
  files(en, 2, "2-group file and dimension n");
  auto* u = app.add_subcommand("universal-check", "representability roundtrip of the universal functor");
  u->add_option("files", cfg.files, "[TWO_GROUP] REP D (D comma separated)")->required()->expected(2, 3);
  auto* b = app.add_subcommand("basis-endomega", "basis components of End(omega) on a quadruple");
  files(b, 1, "quadruple file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? ok : input_error;
  }

  Runner runner(cfg, out, hooks);
  try {
    if (*v)
      return runner.validate();
    if (*r)
      return runner.regular();
    if (*h)
      return runner.hom_rank_cmd();
    if (*o)
      return runner.orbits_cmd();
    if (*z)
      return runner.zregular();
    if (*e)
      return runner.equiv();
    if (*en)
      return runner.enumerate();
    if (*u)
      return runner.universal_check_cmd();
    if (*b)
      return runner.basis_endomega();
  } catch (const Fail&) {
    return math_failure;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return input_error;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return math_failure;
  }
  return input_error;
}

} // namespace kvrep::cli
