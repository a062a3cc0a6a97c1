#include "dgideal/report.hpp"

#include <stdexcept>

namespace dgideal {

bool DiagramReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

int DiagramReport::failure_total() const {
  int t = 0;
  for (const auto& e : entries)
    if (!e.pass) ++t;
  return t;
}

const ReportEntry* DiagramReport::find(const std::string& label) const {
  for (const auto& e : entries)
    if (e.label == label) return &e;
  return nullptr;
}

void DiagramReport::append(const DiagramReport& other, const std::string& prefix) {
  for (ReportEntry e : other.entries) {
    e.label = prefix + e.label;
    if (e.duplicate_of) e.duplicate_of = prefix + *e.duplicate_of;
    entries.push_back(std::move(e));
  }
}

ReportEntry check_equal(const std::string& label, const GradedMap& lhs, const GradedMap& rhs) {
  if (lhs.field() != rhs.field() || lhs.degree() != rhs.degree() ||
      lhs.source() != rhs.source() || lhs.target() != rhs.target())
    throw std::invalid_argument("check_equal(" + label + "): sides have different shapes");

  const Field& f = lhs.field();
  const GradedSpace& src = lhs.source();
  ReportEntry out;
  out.label = label;

  for (int n : src.degrees()) {
    Matrix a = lhs.block(n), b = rhs.block(n);
    for (int c = 0; c < a.cols(); ++c) {
      bool differ = false;
      for (int r = 0; r < a.rows(); ++r)
        if (a.at(r, c) != b.at(r, c)) {
          differ = true;
          break;
        }
      if (!differ) continue;
      ++out.failure_count;
      if (!out.witness) {
        WitnessInfo w;
        w.degree = n;
        const auto& tb = src.tensor_basis(n);
        if (!tb.empty()) {
          w.atoms = tb[c];
          for (size_t k = 0; k < w.atoms.size(); ++k)
            w.tuple.push_back(src.factor((int)k).label(w.atoms[k].first, w.atoms[k].second));
        } else {
          w.atoms = {{n, c}};
          w.tuple = {src.label(n, c)};
        }
        w.lhs = render_element(f, lhs.target(), n + lhs.degree(), a.col(c));
        w.rhs = render_element(f, rhs.target(), n + rhs.degree(), b.col(c));
        out.witness = std::move(w);
      }
    }
  }
  out.pass = out.failure_count == 0;
  return out;
}

ReportEntry merge_entries(const std::string& label, const ReportEntry& a, const ReportEntry& b) {
  ReportEntry out;
  out.label = label;
  out.pass = a.pass && b.pass;
  out.failure_count = a.failure_count + b.failure_count;
  if (a.witness)
    out.witness = a.witness;
  else if (b.witness)
    out.witness = b.witness;
  return out;
}

}  // namespace dgideal
