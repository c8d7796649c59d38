// hallpaige: command-line front end.
//
// Exit codes: 0 success, 1 no mapping / verification failed, 2 invalid
// input, 3 search budget exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hallpaige/hallpaige.hpp"

namespace hp = hallpaige;
namespace cx = hallpaige::coxeter;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNoMapping = 1;
constexpr int kInvalid = 2;
constexpr int kBudget = 3;

struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string spec;
  std::string csv;
  std::string output;
  std::string format = "text";
  std::uint64_t budget = hp::kDefaultSearchBudget;
  bool no_obstruction = false;
  std::vector<hp::Elem> gens;
  std::optional<hp::Elem> x;
  std::string sub_csv;
  std::string quotient_csv;
  std::size_t q = 0;
  std::string trace;
  std::string type;
  int rank = 0;
  std::optional<int> drop;
  bool spaced = false;
  std::string method;
  std::string w, u;
};

void emit_mapping(const Options& o, const hp::CompleteMapping& cm) {
  if (o.output.empty()) {
    hp::write_mapping_csv(std::cout, cm);
    return;
  }
  std::ofstream out(o.output);
  if (!out) hp::fail(hp::Errc::IoError, "cannot write " + o.output);
  hp::write_mapping_csv(out, cm);
}

/// Mapping for a subgroup or quotient: from a file when given, otherwise by
/// search. Returns nullopt (after a message) when none exists.
std::optional<hp::CompleteMapping> mapping_for(const hp::Group& g, const std::string& path,
                                               const Options& o, const char* what) {
  if (!path.empty()) return hp::read_mapping_file(path);
  hp::SearchOptions so;
  so.budget = o.budget;
  so.use_obstruction = !o.no_obstruction;
  auto r = hp::search(g, so);
  if (r.status == hp::CoverStatus::BudgetExhausted)
    throw BudgetExhausted(std::string("budget exhausted searching the ") + what);
  if (!r.mapping) std::cerr << "the " << what << " has no complete mapping\n";
  return r.mapping;
}

int cmd_group_info(const Options& o) {
  const hp::Group g = hp::parse_group_spec(o.spec);
  const hp::HpVerdict v = hp::hall_paige_verdict(g);
  if (o.format == "json") {
    json j{{"spec", o.spec},
           {"order", g.order()},
           {"sylow2_order", v.sylow2_order},
           {"sylow2_cyclic", v.sylow2_cyclic},
           {"verdict", v.good ? "good" : "bad"}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "order " << g.order() << ", Sylow-2 order " << v.sylow2_order << ' '
              << (v.sylow2_cyclic ? "cyclic" : "noncyclic") << ", " << (v.good ? "GOOD" : "BAD")
              << '\n';
  }
  return kOk;
}

int cmd_cm_search(const Options& o) {
  const hp::Group g = hp::parse_group_spec(o.spec);
  hp::SearchOptions so;
  so.budget = o.budget;
  so.use_obstruction = !o.no_obstruction;
  const hp::SearchResult r = hp::search(g, so);
  switch (r.status) {
    case hp::CoverStatus::Found:
      emit_mapping(o, *r.mapping);
      return kOk;
    case hp::CoverStatus::NotFound:
      std::cerr << "no complete mapping"
                << (r.refuted_by_obstruction ? " (product of all elements is nontrivial in G/G')"
                                             : " (exhaustive search)")
                << '\n';
      return kNoMapping;
    case hp::CoverStatus::BudgetExhausted:
      std::cerr << "budget of " << o.budget << " nodes exhausted\n";
      return kBudget;
  }
  return kInvalid;
}

int cmd_cm_verify(const Options& o) {
  const hp::Group g = hp::parse_group_spec(o.spec);
  const hp::CompleteMapping cm = hp::read_mapping_file(o.csv);
  const hp::Verification v = hp::verify(g, cm);
  if (v) {
    std::cout << "ok\n";
    return kOk;
  }
  std::cout << "invalid: " << v.failure << '\n';
  return kNoMapping;
}

hp::Subgroup subgroup_from(const hp::Group& g, const Options& o) {
  for (auto e : o.gens)
    if (e >= g.order()) hp::fail(hp::Errc::BadPrecondition, "generator id " + std::to_string(e) + " out of range");
  return hp::subgroup_generated(g, o.gens);
}

int cmd_lift_z2(const Options& o) {
  const hp::Group g = hp::parse_group_spec(o.spec);
  hp::Elem x = 0;
  if (o.x) {
    x = *o.x;
  } else {
    const hp::Subgroup z = hp::center(g);
    for (hp::Elem e : z.elements())
      if (e != 0 && g.mul(e, e) == 0) {
        x = e;
        break;
      }
    if (x == 0) hp::fail(hp::Errc::NotCentralInvolution, "group has no central involution");
  }
  if (x >= g.order()) hp::fail(hp::Errc::NotCentralInvolution, "element id out of range");
  const hp::Subgroup n(g, {0, x});
  if (!hp::is_normal(g, n)) hp::fail(hp::Errc::NotCentralInvolution, "element is not central");
  const hp::Quotient q = hp::quotient(g, n);
  const auto cm_q = mapping_for(q.group, o.quotient_csv, o, "quotient");
  if (!cm_q) return kNoMapping;
  emit_mapping(o, hp::lift_z2_center(g, x, *cm_q));
  return kOk;
}

int cmd_lift_normal(const Options& o) {
  const hp::Group g = hp::parse_group_spec(o.spec);
  const hp::Subgroup n = subgroup_from(g, o);
  const hp::Quotient q = hp::quotient(g, n);
  const auto cm_n = mapping_for(hp::induced_group(g, n).group, o.sub_csv, o, "normal subgroup");
  if (!cm_n) return kNoMapping;
  const auto cm_q = mapping_for(q.group, o.quotient_csv, o, "quotient");
  if (!cm_q) return kNoMapping;
  emit_mapping(o, hp::compose_normal(g, n, *cm_n, *cm_q));
  return kOk;
}

int cmd_lift_dcst(const Options& o) {
  const hp::Group g = hp::parse_group_spec(o.spec);
  const hp::Subgroup h = subgroup_from(g, o);
  const auto cm_h = mapping_for(hp::induced_group(g, h).group, o.sub_csv, o, "subgroup");
  if (!cm_h) return kNoMapping;
  emit_mapping(o, hp::lift_dcst(g, h, *cm_h));
  return kOk;
}

int cmd_cm_psl2(const Options& o) {
  const hp::Psl2Context ctx = hp::psl2(o.q);
  const hp::Psl2Build b = hp::build_cm_psl2(ctx);
  emit_mapping(o, b.mapping);
  json trace{{"q", o.q}, {"order", ctx.group().order()}, {"branch", std::string(1, b.branch)}};
  json vh = json::array();
  for (auto [h, v] : b.vh) vh.push_back({{"h", h}, {"v_h", v}});
  trace["v_h"] = vh;
  if (b.zeta) trace["zeta"] = *b.zeta;
  trace["verified"] = hp::verify(ctx.group(), b.mapping).ok;
  if (o.trace.empty() || o.trace == "-") {
    std::cerr << trace.dump(2) << '\n';
  } else {
    std::ofstream out(o.trace);
    if (!out) hp::fail(hp::Errc::IoError, "cannot write " + o.trace);
    out << trace.dump(2) << '\n';
  }
  return kOk;
}

int cmd_dcosets(const Options& o) {
  const cx::CoxeterSystem sys = cx::coxeter_system(o.type, o.rank);
  const int r = o.drop.value_or(cx::default_drop(sys));
  sys.check_label(r);
  const cx::ParabolicDoubleCosets pd = cx::double_coset_reps(sys, r);
  for (const auto& w : pd.class_words) std::cout << cx::format_word(w, o.spaced) << '\n';
  return kOk;
}

int cmd_verify_p2(const Options& o) {
  const cx::CoxeterSystem sys = cx::coxeter_system(o.type, o.rank);
  const int r = o.drop.value_or(cx::default_drop(sys));
  sys.check_label(r);
  cx::P2Method method = cx::default_p2_method(sys);
  if (o.method == "product") method = cx::P2Method::Product;
  else if (o.method == "form") method = cx::P2Method::Form;
  const auto report = cx::verify_p2(sys, r, method);
  bool all = true;
  json classes = json::array();
  for (const auto& c : report) {
    json j{{"rep", cx::format_word(c.rep)},
           {"length", c.length},
           {"method", c.method == cx::P2Method::Product ? "product" : "form"},
           {"pass", c.pass}};
    if (c.method == cx::P2Method::Product) j["product_size"] = c.product_size;
    if (c.certificate) {
      j["u"] = cx::format_word(c.certificate->u);
      j["core"] = c.certificate->core;
    }
    classes.push_back(j);
    all = all && c.pass;
  }
  json out{{"type", sys.name()}, {"drop", r}, {"classes", classes}, {"pass", all}};
  std::cout << out.dump(2) << '\n';
  return all ? kOk : kNoMapping;
}

int cmd_hecke(const Options& o) {
  const cx::CoxeterSystem sys = cx::coxeter_system(o.type, o.rank);
  const auto prod = cx::hecke_double_coset_product(sys, cx::parse_word(o.w), cx::parse_word(o.u));
  for (const auto& e : prod) std::cout << cx::format_word(sys.reduced_word(e), o.spaced) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall-Paige toolkit: complete mappings, lifting constructions, Coxeter double cosets"};
  app.require_subcommand(1);
  Options o;
  int (*action)(const Options&) = nullptr;
  auto bind = [&](CLI::App* sub, int (*fn)(const Options&)) {
    sub->callback([&action, fn] { action = fn; });
  };
  auto add_search_opts = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "search node limit");
    sub->add_flag("--no-obstruction", o.no_obstruction, "skip the abelianization test, search exhaustively");
  };

  auto* group = app.add_subcommand("group", "group queries");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "order, Sylow 2-subgroup and Hall-Paige verdict");
  info->add_option("spec", o.spec)->required();
  info->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  bind(info, cmd_group_info);

  auto* cm = app.add_subcommand("cm", "complete mappings");
  cm->require_subcommand(1);
  auto* search = cm->add_subcommand("search", "exact-cover search");
  search->add_option("spec", o.spec)->required();
  search->add_option("-o,--output", o.output, "write CSV here instead of stdout");
  add_search_opts(search);
  bind(search, cmd_cm_search);

  auto* ver = cm->add_subcommand("verify", "check a mapping CSV");
  ver->add_option("spec", o.spec)->required();
  ver->add_option("csv", o.csv)->required();
  bind(ver, cmd_cm_verify);

  auto* lift = cm->add_subcommand("lift", "lift mappings from subgroups and quotients");
  lift->require_subcommand(1);
  auto* z2 = lift->add_subcommand("z2", "through a central involution x");
  z2->add_option("spec", o.spec)->required();
  z2->add_option("--x", o.x, "central involution (default: smallest)");
  z2->add_option("--quotient-cm", o.quotient_csv, "mapping of G/<x> (default: search)");
  z2->add_option("-o,--output", o.output);
  add_search_opts(z2);
  bind(z2, cmd_lift_z2);
  auto* normal = lift->add_subcommand("normal", "from a normal subgroup N and G/N");
  normal->add_option("spec", o.spec)->required();
  normal->add_option("--gens", o.gens, "element ids generating N")->required();
  normal->add_option("--sub-cm", o.sub_csv, "mapping of N in its local numbering (default: search)");
  normal->add_option("--quotient-cm", o.quotient_csv, "mapping of G/N (default: search)");
  normal->add_option("-o,--output", o.output);
  add_search_opts(normal);
  bind(normal, cmd_lift_normal);
  auto* dcst = lift->add_subcommand("dcst", "from H when every H-double coset D has D² ⊇ D");
  dcst->add_option("spec", o.spec)->required();
  dcst->add_option("--gens", o.gens, "element ids generating H")->required();
  dcst->add_option("--sub-cm", o.sub_csv, "mapping of H in its local numbering (default: search)");
  dcst->add_option("-o,--output", o.output);
  add_search_opts(dcst);
  bind(dcst, cmd_lift_dcst);

  auto* psl = cm->add_subcommand("psl2", "constructed mapping of PSL(2,q), q <= 16");
  psl->add_option("q", o.q)->required();
  psl->add_option("--trace", o.trace, "JSON trace file (default: stderr)");
  psl->add_option("-o,--output", o.output);
  bind(psl, cmd_cm_psl2);

  auto* cox = app.add_subcommand("coxeter", "Weyl and dihedral groups");
  cox->require_subcommand(1);
  auto add_type = [&](CLI::App* sub) {
    sub->add_option("type", o.type, "A, B, C, D, E, F (optionally with rank) or I2(m)")->required();
    sub->add_option("rank", o.rank)->required();
  };
  auto* dc = cox->add_subcommand("dcosets", "minimal double coset reps of the maximal parabolic");
  add_type(dc);
  dc->add_option("--drop", o.drop, "generator left out of the parabolic");
  dc->add_flag("--spaced", o.spaced, "separate labels by spaces");
  bind(dc, cmd_dcosets);
  auto* p2 = cox->add_subcommand("verify-p2", "check (BwB)² ⊇ BwB for every class");
  add_type(p2);
  p2->add_option("--drop", o.drop);
  p2->add_option("--method", o.method)->check(CLI::IsMember({"product", "form"}));
  bind(p2, cmd_verify_p2);
  auto* hk = cox->add_subcommand("hecke", "elements v with BvB in (BwB)(BuB)");
  add_type(hk);
  hk->add_option("w", o.w)->required();
  hk->add_option("u", o.u)->required();
  hk->add_flag("--spaced", o.spaced);
  bind(hk, cmd_hecke);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }
  try {
    return action ? action(o) : kInvalid;
  } catch (const hp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const BudgetExhausted& e) {
    std::cerr << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
}
