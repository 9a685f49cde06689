#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace ekc::cli {

using nlohmann::json;

namespace {

json residues(const std::optional<std::vector<Residue>>& v) {
  if (!v) return nullptr;
  json a = json::array();
  for (const auto& x : *v) a.push_back(x.str());
  return a;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string list(const std::optional<std::vector<Residue>>& v) {
  if (!v) return "(capped)";
  std::vector<std::string> s;
  for (const auto& x : *v) s.push_back(x.str());
  return "{" + join(s, ", ") + "}";
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const InvariantsReport& r) {
  json j;
  j["expression"] = r.expression;
  j["group"] = r.group;
  j["linking_form"] = json::array();
  for (const auto& row : r.linking_form) {
    json a = json::array();
    for (const auto& v : row) a.push_back(to_string(v));
    j["linking_form"].push_back(a);
  }
  j["p"] = r.p;
  j["d"] = r.d;
  j["d_pi"] = r.d_pi;
  j["d_m"] = r.d_m;
  j["r"] = opt(r.r);
  j["r_conventional"] = r.r_conventional;
  j["arf_spectrum"] = residues(r.arf_spectrum);
  j["mu_spectrum"] = residues(r.mu_spectrum);
  j["inertia"] = r.inertia ? json(r.inertia->str()) : json(nullptr);
  j["inertia_H"] = r.inertia_H.str();
  if (r.reactivity)
    j["reactivity"] = {{"R", r.reactivity->R},
                       {"R_H", r.reactivity->R_H},
                       {"R_diff", r.reactivity->R_Diff},
                       {"R_diff_H", r.reactivity->R_Diff_H}};
  else
    j["reactivity"] = nullptr;
  j["n_plus"] = opt(r.n_plus);
  j["orientation_reversible"] = opt(r.orientation_reversible);
  j["indecomposable_candidate"] = r.indecomposable_candidate;
  j["caps_exceeded"] = r.caps_exceeded;
  return j;
}

std::string to_text(const InvariantsReport& r) {
  std::ostringstream os;
  auto capped = [](bool have) { return have ? "" : "(capped)"; };
  os << "manifold        " << r.expression << "\n";
  os << "H^4             " << r.group << "\n";
  os << "linking form    ";
  if (r.linking_form.empty()) os << "0";
  for (std::size_t i = 0; i < r.linking_form.size(); ++i) {
    std::vector<std::string> s;
    for (const auto& v : r.linking_form[i]) s.push_back(to_string(v));
    os << (i ? "; " : "[") << join(s, " ");
  }
  os << (r.linking_form.empty() ? "" : "]") << "\n";
  std::vector<std::string> p;
  for (Int x : r.p) p.push_back(std::to_string(x));
  os << "p               (" << join(p, ", ") << ")\n";
  os << "d, d_pi, d_m    " << r.d << ", " << r.d_pi << ", " << r.d_m << "\n";
  os << "r               " << (r.r ? std::to_string(*r.r) : capped(false)) << (r.r_conventional ? " (conventional)" : "")
     << "\n";
  os << "Arf spectrum    " << list(r.arf_spectrum) << "\n";
  os << "mu spectrum     " << list(r.mu_spectrum) << "\n";
  os << "I_H, I          " << r.inertia_H.str() << ", " << (r.inertia ? r.inertia->str() : capped(false)) << "\n";
  if (r.reactivity)
    os << "R, R_H          " << r.reactivity->R << ", " << r.reactivity->R_H << "\n"
       << "R_diff, R_diff_H " << r.reactivity->R_Diff << ", " << r.reactivity->R_Diff_H << "\n";
  else
    os << "reactivity      (capped)\n";
  os << "n_+             " << (r.n_plus ? std::to_string(*r.n_plus) : capped(false)) << "\n";
  os << "reversible      "
     << (r.orientation_reversible ? (*r.orientation_reversible ? "yes" : "no") : capped(false)) << "\n";
  os << "indecomposable  " << (r.indecomposable_candidate ? "not excluded" : "no") << "\n";
  if (!r.caps_exceeded.empty()) os << "caps exceeded   " << join(r.caps_exceeded, ", ") << "\n";
  return os.str();
}

json to_json(const Table& t) {
  json j;
  j["table"] = t.name;
  j["rows"] = json::array();
  for (const auto& r : t.rows) {
    json row = {{"label", r.label}, {"expected", r.expected}, {"got", r.got}, {"match", r.match}};
    if (r.known_discrepancy) row["known_discrepancy"] = r.note;
    j["rows"].push_back(row);
  }
  j["matches"] = t.matches();
  j["total"] = t.rows.size();
  j["unexpected_mismatches"] = t.unexpected();
  return j;
}

std::string to_text(const Table& t) {
  std::ostringstream os;
  std::size_t w = 0;
  for (const auto& r : t.rows) w = std::max(w, r.label.size());
  for (const auto& r : t.rows) {
    os << (r.match ? "ok   " : r.known_discrepancy ? "KNOWN" : "DIFF ") << "  " << r.label
       << std::string(w - r.label.size() + 2, ' ') << r.got;
    if (!r.match) os << "   expected " << r.expected;
    if (r.known_discrepancy) os << "\n       note: " << r.note;
    os << "\n";
  }
  os << t.name << ": " << t.matches() << "/" << t.rows.size() << " rows match";
  if (int k = static_cast<int>(t.rows.size()) - t.matches() - t.unexpected()) os << ", " << k << " known discrepancy";
  os << " (" << std::fixed << std::setprecision(2) << t.seconds << " s)\n";
  return os.str();
}

}  // namespace ekc::cli
