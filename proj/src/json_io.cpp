#include "ua/json_io.hpp"

#include <sstream>

namespace ua::io {

Json to_json(const Partition& p) {
  Json a = Json::array();
  for (int v : p.parts()) a.push_back(v);
  return a;
}

Json to_json(const LeviDatum& levi) { return Json{{"gl", to_json(levi.gl_parts)}, {"cl", levi.cl_rank}}; }

Json to_json(const BCPair& pair) { return Json{{"gl", to_json(pair.gl_factors)}, {"dist", to_json(pair.dist_partition)}}; }

Json to_json(const ParabolicLabel& j) {
  Json a = Json::array();
  for (int v : j.nodes()) a.push_back(v);
  return a;
}

Json to_json(const DimRange& d) {
  if (d.exact()) return d.lo;
  return Json{{"min", d.lo}, {"max", d.hi}};
}

Json to_json(const oracle::Report& r, const Partition& predicted) {
  Json observed = Json::array();
  for (const auto& p : r.observed) observed.push_back(to_json(p));
  return Json{{"all_le", r.all_le},
              {"attained", r.attained},
              {"attained_count", r.attained_count},
              {"total", r.total},
              {"q", r.q},
              {"dim_Q", r.dim_q},
              {"exhaustive", r.exhaustive},
              {"parity_ok", r.parity_ok},
              {"predicted", to_json(predicted)},
              {"observed", std::move(observed)}};
}

Json to_json(const acceptance::Outcome& o) {
  return Json{{"id", o.id},         {"name", o.name},
              {"passed", o.passed}, {"seconds", o.seconds},
              {"limit_seconds", o.limit_seconds}, {"detail", o.detail}};
}

namespace {

std::string dim_label(const DimRange& d) {
  if (d.exact()) return std::to_string(d.lo);
  return std::to_string(d.lo) + ".." + std::to_string(d.hi);
}

}  // namespace

Json poset_json(const ClassPoset& poset) {
  Json nodes = Json::array();
  for (const auto& rec : poset.nodes) nodes.push_back(Json{{"partition", to_json(rec.partition)}, {"dim", to_json(class_dim(rec))}});
  Json covers = Json::array();
  for (const auto& [lo, hi] : poset.covers) covers.push_back(Json::array({lo, hi}));
  return Json{{"group", to_string(poset.group)}, {"nodes", std::move(nodes)}, {"covers", std::move(covers)}};
}

std::string poset_dot(const ClassPoset& poset) {
  std::ostringstream os;
  os << "digraph poset {\n";
  for (const auto& rec : poset.nodes) {
    const std::string name = to_string(rec.partition);
    os << "  \"" << name << "\" [label=\"" << name << " (dim " << dim_label(class_dim(rec)) << ")\"];\n";
  }
  for (const auto& [lo, hi] : poset.covers) {
    os << "  \"" << to_string(poset.nodes[static_cast<std::size_t>(hi)].partition) << "\" -> \""
       << to_string(poset.nodes[static_cast<std::size_t>(lo)].partition) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

std::string poset_text(const ClassPoset& poset) {
  std::ostringstream os;
  os << to_string(poset.group) << ": " << poset.nodes.size() << " classes, " << poset.covers.size() << " covers\n";
  for (const auto& rec : poset.nodes) os << "  " << to_string(rec.partition) << "  dim " << dim_label(class_dim(rec)) << "\n";
  for (const auto& [lo, hi] : poset.covers) {
    os << "  " << to_string(poset.nodes[static_cast<std::size_t>(lo)].partition) << " < "
       << to_string(poset.nodes[static_cast<std::size_t>(hi)].partition) << "\n";
  }
  return os.str();
}

}  // namespace ua::io
