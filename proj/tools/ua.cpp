// ua: unipotent-class toolkit front end.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ua/acceptance.hpp"
#include "ua/bala_carter.hpp"
#include "ua/class_catalog.hpp"
#include "ua/errors.hpp"
#include "ua/json_io.hpp"
#include "ua/oracle.hpp"
#include "ua/richardson.hpp"
#include "ua/root_system.hpp"

namespace {

using ua::io::Json;

constexpr int kOk = 0;
constexpr int kDomain = 2;
constexpr int kUnsupported = 3;
constexpr int kVerification = 4;

struct GroupArgs {
  std::string family;
  int rank = -1;
  std::string charc = "good";
};

struct Config {
  GroupArgs group;
  std::optional<std::string> levi;
  std::optional<std::string> nodes;
  std::string partition;
  std::string gl;
  std::string dist;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> sample;
  std::uint64_t budget = 1'000'000;
  int q = 0;
  int criterion = 0;
};

void add_group(CLI::App* sub, GroupArgs& g, bool with_char = true) {
  sub->add_option("--family", g.family, "gl, sp, so-odd, so-even, o-even")->required();
  sub->add_option("--rank", g.rank, "n of GL_n, Sp_2n, SO_2n+1, SO_2n, O_2n")->required();
  if (with_char) sub->add_option("--char", g.charc, "good or 2")->capture_default_str();
}

void add_selector(CLI::App* sub, Config& c) {
  auto* levi = sub->add_option("--levi", c.levi, "Levi datum n1,n2,...+m");
  auto* nodes = sub->add_option("--nodes", c.nodes, "Bourbaki indices in J, empty for the Borel");
  levi->excludes(nodes);
}

void add_format(CLI::App* sub, Config& c, std::vector<std::string> allowed) {
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(std::move(allowed)));
}

ua::GroupSpec group_of(const GroupArgs& a) {
  ua::GroupSpec g{ua::parse_family(a.family), a.rank, ua::parse_char(a.charc)};
  ua::validate(g);
  return g;
}

ua::LeviDatum resolve_levi(const Config& c, const ua::GroupSpec& g) {
  if (c.levi) {
    ua::LeviDatum levi = ua::parse_levi(*c.levi);
    ua::validate_levi(g, levi);
    return levi;
  }
  const ua::RootSystem rs = ua::root_system_for(g);
  return ua::levi_partition(rs, ua::parse_nodes(c.nodes.value_or("")), g);
}

std::uint64_t resolve_seed(const Config& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("UA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ua::DomainError(std::string("UA_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

std::string format_or(const Config& c, const char* fallback) { return c.format.value_or(fallback); }

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int cmd_richardson(const Config& c) {
  const ua::GroupSpec g = group_of(c.group);
  const ua::LeviDatum levi = resolve_levi(c, g);
  const ua::Partition psi = ua::richardson_psi(g, levi);
  const ua::Partition lambda = ua::richardson_partition(g, levi);
  const bool rerouted = g.family == ua::Family::SOodd && g.char_class == ua::CharClass::Two;
  if (format_or(c, "json") == "text") {
    std::cout << "levi " << ua::to_string(levi) << "  psi " << ua::to_string(psi) << (rerouted ? " (sp)" : "")
              << "  richardson " << ua::to_string(lambda) << "\n";
    return kOk;
  }
  Json out{{"levi", ua::io::to_json(levi)}, {"psi", ua::io::to_json(psi)}};
  if (rerouted) out["psi_group"] = "sp";
  out["richardson"] = ua::io::to_json(lambda);
  emit(out);
  return kOk;
}

int cmd_regular(const Config& c) {
  const ua::GroupSpec g = group_of(c.group);
  const auto classes = ua::regular_partition(g);
  if (format_or(c, "json") == "text") {
    for (const auto& p : classes) std::cout << ua::to_string(p) << "\n";
    return kOk;
  }
  Json list = Json::array();
  for (const auto& p : classes) list.push_back(ua::io::to_json(p));
  emit(Json{{"group", ua::to_string(g)}, {"regular", std::move(list)}});
  return kOk;
}

int cmd_poset(const Config& c) {
  const ua::ClassPoset poset = ua::closure_poset(group_of(c.group));
  const std::string fmt = format_or(c, "json");
  if (fmt == "dot") {
    std::cout << ua::io::poset_dot(poset);
  } else if (fmt == "text") {
    std::cout << ua::io::poset_text(poset);
  } else {
    emit(ua::io::poset_json(poset));
  }
  return kOk;
}

std::optional<ua::RootFamily> exceptional_family(const std::string& text) {
  try {
    const ua::RootFamily f = ua::parse_root_family(text);
    if (ua::exceptional_rank(f) != 0) return f;
  } catch (const ua::DomainError&) {
  }
  return std::nullopt;
}

int cmd_distinguished(const Config& c) {
  if (const auto ex = exceptional_family(c.group.family)) {
    const ua::RootSystem rs = ua::RootSystem::build(*ex, ua::exceptional_rank(*ex));
    Json list = Json::array();
    for (const auto& j : ua::enumerate_distinguished_parabolics(rs)) {
      const ua::RadicalDims d = ua::radical_dims(rs, j);
      list.push_back(Json{{"nodes", ua::io::to_json(j)}, {"dim_l_mod_z", d.dim_l_mod_z}, {"dim_q", d.dim_q}});
    }
    emit(Json{{"root_system", rs.name()},
              {"parabolics", std::move(list)},
              {"injective", ua::check_levi_dim_injectivity(rs)}});
    return kOk;
  }
  if (c.group.rank < 0) throw ua::DomainError("--rank is required for classical families");
  const ua::GroupSpec g = group_of(c.group);
  const ua::RootSystem rs = ua::root_system_for(g);
  Json list = Json::array();
  for (const auto& j : ua::enumerate_distinguished_parabolics(rs)) {
    const ua::RadicalDims d = ua::radical_dims(rs, j);
    const ua::LeviDatum levi = ua::levi_partition(rs, j, g);
    list.push_back(Json{{"nodes", ua::io::to_json(j)},
                        {"dim_l_mod_z", d.dim_l_mod_z},
                        {"dim_q", d.dim_q},
                        {"levi", ua::io::to_json(levi)},
                        {"richardson", ua::io::to_json(ua::richardson_partition(g, levi))}});
  }
  Json table = Json::array();
  for (const auto& p : ua::distinguished_partitions(g)) table.push_back(ua::io::to_json(p));
  emit(Json{{"group", ua::to_string(g)},
            {"root_system", rs.name()},
            {"parabolics", std::move(list)},
            {"partitions", std::move(table)},
            {"injective", ua::check_levi_dim_injectivity(rs)}});
  return kOk;
}

int cmd_bc_label(const Config& c) {
  const ua::GroupSpec g = group_of(c.group);
  const ua::Partition lambda = ua::parse_partition(c.partition);
  emit(Json{{"partition", ua::io::to_json(lambda)}, {"label", ua::io::to_json(ua::bc_label(g, lambda))}});
  return kOk;
}

int cmd_bc_enumerate(const Config& c) {
  const ua::GroupSpec g = group_of(c.group);
  Json list = Json::array();
  for (const auto& pair : ua::bc_enumerate(g)) {
    Json entry = ua::io::to_json(pair);
    entry["image"] = ua::io::to_json(ua::bc_image(g, pair));
    list.push_back(std::move(entry));
  }
  emit(Json{{"group", ua::to_string(g)}, {"labels", std::move(list)}});
  return kOk;
}

int cmd_bc_image(const Config& c) {
  const ua::GroupSpec g = group_of(c.group);
  const ua::BCPair pair{ua::parse_partition(c.gl), ua::parse_partition(c.dist)};
  emit(Json{{"label", ua::io::to_json(pair)}, {"image", ua::io::to_json(ua::bc_image(g, pair))}});
  return kOk;
}

int cmd_verify(const Config& c) {
  ua::GroupSpec g{ua::parse_family(c.group.family), c.group.rank,
                  c.q % 2 == 0 ? ua::CharClass::Two : ua::CharClass::Good};
  ua::validate(g);
  const ua::LeviDatum levi = resolve_levi(c, g);
  const ua::Partition predicted = ua::richardson_partition(g, levi);
  ua::oracle::EnumerationOptions opts;
  opts.budget = c.budget;
  opts.sample = c.sample;
  opts.seed = resolve_seed(c);
  const ua::oracle::Report rep = ua::oracle::verify_with_retry(g.family, g.rank, c.q, levi, predicted, opts);
  emit(ua::io::to_json(rep, predicted));
  if (!rep.passed()) {
    std::cerr << "ua: verification-failed: all_le=" << rep.all_le << " attained=" << rep.attained << "\n";
    return kVerification;
  }
  return kOk;
}

int cmd_selfcheck(const Config& c) {
  std::vector<ua::acceptance::Outcome> outcomes;
  if (c.criterion != 0) {
    outcomes.push_back(ua::acceptance::run(c.criterion));
  } else {
    outcomes = ua::acceptance::run_all();
  }
  const bool json = format_or(c, "text") == "json";
  bool all = true;
  Json list = Json::array();
  for (const auto& o : outcomes) {
    all = all && o.passed;
    if (json) {
      list.push_back(ua::io::to_json(o));
    } else {
      std::cout << ua::acceptance::format_line(o) << "\n";
    }
  }
  if (json) emit(Json{{"criteria", std::move(list)}, {"passed", all}});
  return all ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Richardson classes, closure orders and Bala-Carter labels of classical groups"};
  app.require_subcommand(1);
  Config c;
  int (*command)(const Config&) = nullptr;
  auto bind = [&](CLI::App* sub, int (*fn)(const Config&)) { sub->callback([&command, fn] { command = fn; }); };

  auto* richardson = app.add_subcommand("richardson", "Jordan type of the Richardson class of a parabolic");
  add_group(richardson, c.group);
  add_selector(richardson, c);
  add_format(richardson, c, {"json", "text"});
  bind(richardson, cmd_richardson);

  auto* regular = app.add_subcommand("regular", "Jordan types of the regular unipotent classes");
  add_group(regular, c.group);
  add_format(regular, c, {"json", "text"});
  bind(regular, cmd_regular);

  auto* poset = app.add_subcommand("poset", "closure order of the unipotent classes");
  add_group(poset, c.group);
  add_format(poset, c, {"json", "dot", "text"});
  bind(poset, cmd_poset);

  auto* distinguished = app.add_subcommand("distinguished", "distinguished parabolics and their classes");
  distinguished->add_option("--family", c.group.family, "classical family or e6, e7, e8, f4, g2")->required();
  distinguished->add_option("--rank", c.group.rank, "rank (classical families)");
  distinguished->add_option("--char", c.group.charc, "good or 2")->capture_default_str();
  bind(distinguished, cmd_distinguished);

  auto* bc = app.add_subcommand("bala-carter", "Bala-Carter labels");
  bc->require_subcommand(1);
  auto* label = bc->add_subcommand("label", "label of a class");
  add_group(label, c.group);
  label->add_option("--partition", c.partition, "Jordan type, e.g. 4,4,2")->required();
  bind(label, cmd_bc_label);
  auto* enumerate = bc->add_subcommand("enumerate", "all labels with their classes");
  add_group(enumerate, c.group, false);
  bind(enumerate, cmd_bc_enumerate);
  auto* image = bc->add_subcommand("image", "class of a label");
  add_group(image, c.group);
  image->add_option("--gl", c.gl, "GL factor sizes")->capture_default_str();
  image->add_option("--dist", c.dist, "distinguished partition of the classical factor")->capture_default_str();
  bind(image, cmd_bc_image);

  auto* verify = app.add_subcommand("verify", "check a prediction against the finite-field oracle");
  verify->add_option("--family", c.group.family, "gl, sp, so-odd, so-even, o-even")->required();
  verify->add_option("--rank", c.group.rank, "rank")->required();
  verify->add_option("--q", c.q, "field order: 2, 3, 4 or 5")->required()->check(CLI::Range(2, 5));
  add_selector(verify, c);
  verify->add_option("--seed", c.seed, "sampling seed (default: UA_SEED or 1)");
  verify->add_option("--sample", c.sample, "draw this many elements instead of enumerating");
  verify->add_option("--budget", c.budget, "largest radical enumerated exhaustively")->capture_default_str();
  bind(verify, cmd_verify);

  auto* selfcheck = app.add_subcommand("selfcheck", "run the built-in acceptance checks");
  selfcheck->add_option("--criterion", c.criterion, "run a single criterion")->check(CLI::Range(1, ua::acceptance::kCriteria));
  add_format(selfcheck, c, {"text", "json"});
  bind(selfcheck, cmd_selfcheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "ua: usage-error: " << e.what() << "\n";
    return kDomain;
  }

  try {
    return command(c);
  } catch (const ua::UnsupportedRegime& e) {
    std::cerr << "ua: unsupported-regime: " << e.what() << "\n";
    return kUnsupported;
  } catch (const ua::BudgetExceeded& e) {
    std::cerr << "ua: budget-exceeded: " << e.what() << "\n";
    return kDomain;
  } catch (const ua::DomainError& e) {
    std::cerr << "ua: domain-error: " << e.what() << "\n";
    return kDomain;
  }
}
