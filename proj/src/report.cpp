#include "gpi/report.hpp"

#include <sstream>

#include "gpi/config.hpp"

namespace gpi::report {

using nlohmann::json;

namespace {

json index_list(const std::vector<int>& xs) { return json(xs); }

json hat_map(const PartialInjection& p) {
  json out = json::array();
  for (int i : p.domain()) out.push_back({i, p.raw(i)});
  return out;
}

}  // namespace

json envelope(const std::string& command, const Grading& grading) {
  json tuple = json::array();
  for (const auto g : grading.tuple()) tuple.push_back(grading.group().name(g));
  return {{"schema", kSchema}, {"command", command}, {"grading", {{"n", grading.n()}, {"tuple", tuple}}}};
}

json grading_info(const Grading& grading) {
  const Group& group = grading.group();
  json support = json::array();
  for (const auto g : grading.support()) support.push_back(group.name(g));
  json elements = json::array();
  for (const auto g : group.elements()) {
    elements.push_back({{"element", group.name(g)},
                        {"inverse", group.name(group.inv(g))},
                        {"in_support", grading.in_support(g)},
                        {"D", index_list(grading.d_set(g))},
                        {"Im", index_list(grading.im_set(g))},
                        {"hat", hat_map(grading.hat(g))}});
  }
  json degrees = json::array();
  for (int i = 1; i <= static_cast<int>(grading.n()); ++i) {
    json row = json::array();
    for (int j = 1; j <= static_cast<int>(grading.n()); ++j)
      row.push_back(group.name(grading.degree_of_unit(i, j)));
    degrees.push_back(row);
  }
  return {{"group_order", group.order()},
          {"support", support},
          {"support_size", support.size()},
          {"unit_degrees", degrees},
          {"elements", elements}};
}

json matrix(const SparseMatrix& m) {
  json entries = json::array();
  for (const auto& [pos, v] : m.entries()) {
    entries.push_back({{"row", pos.first}, {"col", pos.second}, {"value", v.to_string()}});
  }
  return {{"n", m.n()}, {"zero", m.is_zero()}, {"entries", entries}};
}

json witness(const Witness& w) {
  json units = json::array();
  for (const auto& [a, b] : w.units) units.push_back({a, b});
  return {{"start_row", w.start_row}, {"end_row", w.end_row}, {"units", units}};
}

json verdict(const IdentityVerdict& v) {
  json out = {{"is_identity", v.is_identity}};
  out["witness"] = v.witness ? witness(*v.witness) : json(nullptr);
  json off = json::array();
  for (const auto& e : v.offending)
    off.push_back({{"row", e.row}, {"col", e.col}, {"value", e.value.to_string()}});
  out["offending"] = off;
  return out;
}

json reduction(const UReduction& r, const Group& group) {
  json terms = json::array();
  for (const auto& t : r.monomial_identity_terms) {
    json cert = nullptr;
    if (t.certificate) {
      cert = {{"first", t.certificate->first},
              {"last", t.certificate->second},
              {"subword", format_monomial(t.monomial.subword(t.certificate->first, t.certificate->second), group)}};
    }
    json blocks = nullptr;
    if (t.consequence) {
      json degs = json::array();
      for (const auto d : t.consequence->block_degrees) degs.push_back(group.name(d));
      blocks = {{"first", t.consequence->first},
                {"last", t.consequence->last},
                {"block_ends", t.consequence->block_ends},
                {"block_degrees", degs}};
    }
    terms.push_back({{"monomial", format_monomial(t.monomial, group)},
                     {"coefficient", t.coefficient.to_string()},
                     {"certificate", cert},
                     {"block_certificate", blocks}});
  }
  json classes = json::array();
  for (const auto& c : r.classes) {
    json members = json::array();
    for (const auto& [m, coeff] : c.members)
      members.push_back({{"monomial", format_monomial(m, group)}, {"coefficient", coeff.to_string()}});
    classes.push_back({{"members", members}, {"sum", c.sum.to_string()}, {"evaluation", c.fingerprint}});
  }
  return {{"monomial_identity_terms", terms},
          {"classes", classes},
          {"in_T", r.in_T},
          {"in_U_certified", r.in_U_certified}};
}

json basis(const BasisReport& report) {
  json fams = json::array();
  int index = 1;
  for (const auto& f : report.families) {
    fams.push_back({{"family", index++},
                    {"name", f.name},
                    {"passed", f.passed},
                    {"instances", f.instances},
                    {"failures", f.failures}});
  }
  return {{"families", fams}, {"all_passed", report.all_passed()}};
}

json words(std::span<const SignedWord> ws, const Group& group) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(format_word(w, group));
  return out;
}

json derivation(const std::optional<std::vector<RewriteStep>>& steps, const Group& group) {
  if (!steps) return {{"found", false}, {"steps", json::array()}};
  json out = json::array();
  for (const auto& s : *steps) {
    out.push_back({{"move", to_string(s.kind)},
                   {"first", s.first},
                   {"mid", s.mid},
                   {"last", s.last},
                   {"result", format_monomial(s.result, group)}});
  }
  return {{"found", true}, {"steps", out}};
}

std::string grading_info_text(const Grading& grading) {
  const Group& group = grading.group();
  std::ostringstream out;
  out << "group order: " << group.order() << "\n";
  out << "tuple: " << grading.tuple_string() << " (n = " << grading.n() << ")\n";
  out << "support (" << grading.support().size() << "):";
  for (const auto g : grading.support()) out << " " << group.name(g);
  out << "\n";
  for (const auto g : group.elements()) {
    const auto& h = grading.hat(g);
    out << "  " << group.name(g) << ": ";
    if (h.empty()) {
      out << "not in support\n";
      continue;
    }
    out << "D = {";
    const auto d = grading.d_set(g);
    for (std::size_t i = 0; i < d.size(); ++i) out << (i ? "," : "") << d[i];
    out << "}, Im = {";
    const auto im = grading.im_set(g);
    for (std::size_t i = 0; i < im.size(); ++i) out << (i ? "," : "") << im[i];
    out << "}, hat = " << h.to_string() << "\n";
  }
  return out.str();
}

std::string reduction_text(const UReduction& r, const Group& group) {
  std::ostringstream out;
  for (const auto& t : r.monomial_identity_terms) {
    out << "  monomial identity " << t.coefficient.to_string() << " * " << format_monomial(t.monomial, group);
    if (t.certificate) {
      out << "  [subword " << t.certificate->first << ".." << t.certificate->second << ": "
          << format_monomial(t.monomial.subword(t.certificate->first, t.certificate->second), group)
          << "]\n";
    } else if (t.consequence) {
      out << "  [blocks ending at";
      for (const auto end : t.consequence->block_ends) out << ' ' << end;
      out << ", degrees";
      for (const auto d : t.consequence->block_degrees) out << ' ' << group.name(d);
      out << "]\n";
    } else {
      out << "  [no certificate of degree <= 2n-1]\n";
    }
  }
  std::size_t index = 1;
  for (const auto& c : r.classes) {
    out << "  class " << index++ << " (sum " << c.sum.to_string() << "):";
    for (const auto& [m, coeff] : c.members) out << "  " << coeff.to_string() << " * " << format_monomial(m, group);
    out << "\n";
  }
  return out.str();
}

}  // namespace gpi::report
