#include "dgideal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dgideal/document.hpp"

namespace dgideal {

namespace {

const char* kUsage =
    "usage: dgideal <command> <file> [targets...] [--witness]\n"
    "\n"
    "  check-dga       verify algebra axioms           (default: every dga)\n"
    "  check-map       verify chain/algebra morphisms  (default: every map)\n"
    "  check-bimodule  verify bimodule axioms          (default: every bimodule)\n"
    "  check-ideal     verify ideals as declared; --full builds the full\n"
    "                  presentation first, --reduced derives the reduced one\n"
    "  derive          reduce ideals declared in full form\n"
    "  build           promote ideals declared in reduced form\n"
    "  cone            homotopy quotient of an ideal, with its homology\n"
    "  fiber           kernel of a surjective algebra map, as an ideal\n"
    "  roundtrip       fiber -> quotients -> fiber comparison for a surjection\n"
    "  homology        homology of declared complexes   (default: every complex)\n"
    "  sum             componentwise sum of exactly two ideals\n"
    "  free-square     R (x) R with j = multiplication  (default: every dga)\n"
    "  print           canonical form of the file\n";

struct ValueRecord {
  std::string label;
  int value = 0;
};

struct TargetReport {
  std::string target;
  std::vector<ReportEntry> entries;
  std::vector<ValueRecord> values;

  int failing() const {
    int k = 0;
    for (const auto& e : entries)
      if (!e.pass) ++k;
    return k;
  }
};

std::string record_line(const ReportEntry& e, bool witness) {
  std::string s = "record label=" + e.label + " status=" + (e.pass ? "pass" : "fail");
  if (e.duplicate_of) s += " duplicate_of=" + *e.duplicate_of;
  if (!e.pass && witness) {
    s += " failures=" + std::to_string(e.failure_count);
    if (e.witness) {
      s += " witness_degree=" + std::to_string(e.witness->degree);
      s += " witness_basis=(";
      for (std::size_t i = 0; i < e.witness->tuple.size(); ++i) {
        if (i) s += ",";
        s += e.witness->tuple[i];
      }
      s += ") lhs=" + e.witness->lhs + " rhs=" + e.witness->rhs;
    }
  }
  return s;
}

void emit(std::ostream& out, const std::string& cmd, const Field& f,
          const TargetReport& t, bool witness) {
  out << "command " << cmd << "\n";
  out << "target " << t.target << "\n";
  out << "field " << f.name() << "\n";
  std::vector<std::pair<std::string, std::string>> lines;
  for (const auto& e : t.entries) lines.emplace_back(e.label, record_line(e, witness));
  for (const auto& v : t.values)
    lines.emplace_back(v.label,
                       "record label=" + v.label + " value=" + std::to_string(v.value));
  std::stable_sort(lines.begin(), lines.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [label, line] : lines) out << line << "\n";
  out << "summary records=" << lines.size() << " failures=" << t.failing() << "\n";
}

std::vector<ValueRecord> homology_records(const ChainComplex& c) {
  std::vector<ValueRecord> out;
  HomologyData h = homology(c);
  for (const auto& [n, k] : h.dims())
    out.push_back({"H_" + std::to_string(n), k});
  return out;
}

/* The single dga declared on a complex, if there is exactly one. */
const std::string* unique_dga_on(const Document& doc, const std::string& cname) {
  const std::string* found = nullptr;
  for (const auto& d : doc.dgas) {
    if (d.complex != cname) continue;
    if (found) return nullptr;
    found = &d.name;
  }
  return found;
}

struct UsageError {
  std::string msg;
};

int run_parsed(const std::string& cmd, const std::string& path,
               std::vector<std::string> targets, bool witness, bool flag_full,
               bool flag_reduced, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read '" << path << "'\n";
    return 2;
  }
  std::stringstream text;
  text << in.rdbuf();

  Document doc;
  try {
    doc = parse_document(text.str());
  } catch (const std::invalid_argument& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return 2;
  }

  if (cmd == "print") {
    if (!targets.empty()) {
      err << "error: print takes no targets\n";
      return 2;
    }
    out << print_document(doc);
    return 0;
  }

  DocRuntime rt(std::move(doc));
  std::ostringstream buf;
  std::ostringstream human;
  int worst = 0;

  try {
    if (targets.empty()) {
      if (cmd == "check-dga" || cmd == "free-square") targets = rt.names(DeclKind::Dga);
      if (cmd == "check-map") targets = rt.names(DeclKind::Map);
      if (cmd == "check-bimodule") targets = rt.names(DeclKind::Bimodule);
      if (cmd == "check-ideal") targets = rt.names(DeclKind::Ideal);
      if (cmd == "homology") targets = rt.names(DeclKind::Complex);
      if (cmd == "derive" || cmd == "build")
        for (const auto& d : rt.doc().ideals)
          if (d.reduced == (cmd == "build")) targets.push_back(d.name);
      if (cmd == "fiber" || cmd == "roundtrip")
        throw UsageError{cmd + " needs at least one map name"};
      if (cmd == "sum") throw UsageError{"sum takes exactly two ideal names"};
    }
    if (cmd == "sum" && targets.size() != 2)
      throw UsageError{"sum takes exactly two ideal names"};

    auto one_target = [&](const std::string& name) -> std::vector<TargetReport> {
      TargetReport t;
      t.target = name;
      if (cmd == "check-dga") {
        t.entries = rt.check_dga(name).report.entries;
      } else if (cmd == "check-map") {
        const MapDecl& d = rt.map_decl(name);
        const GradedMap& g = rt.map(name);
        const std::string* an = d.src2 ? nullptr : unique_dga_on(rt.doc(), d.src1);
        const std::string* bn = d.src2 ? nullptr : unique_dga_on(rt.doc(), d.dst);
        if (an && bn) {
          t.entries = verify_dga_map(rt.dga(*an), rt.dga(*bn), g).report.entries;
        } else {
          ChainComplex src = d.src2 ? tensor_complex(rt.complex(d.src1), rt.complex(*d.src2))
                                    : rt.complex(d.src1);
          t.entries = {chain_map_entry("chain", src, rt.complex(d.dst), g)};
        }
      } else if (cmd == "check-bimodule") {
        t.entries = rt.check_bimodule(name).report.entries;
      } else if (cmd == "check-ideal") {
        bool declared_reduced = rt.ideal_decl(name).reduced;
        if (flag_full) {
          t.entries = declared_reduced ? rt.build_report(name).report.entries
                                       : verify_ideal(rt.full_ideal(name)).entries;
        } else if (flag_reduced) {
          t.entries = declared_reduced ? verify_smith(rt.reduced_ideal(name)).entries
                                       : rt.derive_report(name).report.entries;
        } else {
          t.entries = declared_reduced ? verify_smith(rt.reduced_ideal(name)).entries
                                       : verify_ideal(rt.full_ideal(name)).entries;
        }
      } else if (cmd == "derive") {
        t.entries = rt.derive_report(name).report.entries;
      } else if (cmd == "build") {
        t.entries = rt.build_report(name).report.entries;
      } else if (cmd == "cone") {
        ConeDgaResult r = cone_dga(rt.reduced_ideal(name));
        t.entries = r.report.entries;
        t.values = homology_records(r.parts.cone);
      } else if (cmd == "fiber") {
        t.entries = fiber_ideal(rt.dga_morphism(name)).report.entries;
      } else if (cmd == "roundtrip") {
        t.entries = roundtrip_check(rt.dga_morphism(name)).entries;
      } else if (cmd == "homology") {
        t.values = homology_records(rt.complex(name));
      } else if (cmd == "free-square") {
        t.entries = build_ideal(free_square_candidate(rt.dga(name))).report.entries;
      } else {
        throw UsageError{"unknown command '" + cmd + "'"};
      }
      return {std::move(t)};
    };

    if (cmd == "sum") {
      const IdealData& a = rt.reduced_ideal(targets[0]);
      const IdealData& b = rt.reduced_ideal(targets[1]);
      TargetReport t;
      t.target = targets[0] + "+" + targets[1];
      t.entries = build_ideal(sum_ideals(a, b)).report.entries;
      emit(buf, cmd, rt.field(), t, witness);
      human << cmd << ": " << t.target << ": " << t.entries.size() << " records, "
            << t.failing() << " failures\n";
      if (t.failing()) worst = 1;
    } else {
      for (const auto& name : targets) {
        try {
          for (TargetReport& t : one_target(name)) {
            emit(buf, cmd, rt.field(), t, witness);
            std::size_t records = t.entries.size() + t.values.size();
            human << cmd << ": " << t.target << ": " << records << " records, "
                  << t.failing() << " failures\n";
            if (t.failing()) worst = 1;
          }
        } catch (const DependencyFailure& df) {
          TargetReport t;
          t.target = df.target;
          t.entries = df.report.entries;
          emit(buf, cmd, rt.field(), t, witness);
          human << cmd << ": " << name << ": blocked, dependency '" << df.target
                << "' has " << t.failing() << " failures\n";
          worst = 1;
        }
      }
    }
  } catch (const DependencyFailure& df) {  // sum: dependency of an operand
    TargetReport t;
    t.target = df.target;
    t.entries = df.report.entries;
    emit(buf, cmd, rt.field(), t, witness);
    human << cmd << ": blocked, dependency '" << df.target << "' has " << t.failing()
          << " failures\n";
    worst = 1;
  } catch (const UsageError& ue) {
    err << "error: " << ue.msg << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  out << "report-version 1\n" << buf.str();
  err << human.str();
  return worst;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  bool witness = false, flag_full = false, flag_reduced = false;
  std::vector<std::string> rest;
  for (const auto& a : args) {
    if (a == "--witness") {
      witness = true;
    } else if (a == "--full") {
      flag_full = true;
    } else if (a == "--reduced") {
      flag_reduced = true;
    } else if (a.rfind("--", 0) == 0) {
      err << "error: unknown flag '" << a << "'\n" << kUsage;
      return 2;
    } else {
      rest.push_back(a);
    }
  }
  if (rest.size() < 2) {
    err << kUsage;
    return 2;
  }
  const std::string& cmd = rest[0];
  static const char* kCommands[] = {"check-dga", "check-map", "check-bimodule",
                                    "check-ideal", "derive",    "build",
                                    "cone",        "fiber",     "roundtrip",
                                    "homology",    "sum",       "free-square",
                                    "print"};
  if (std::find_if(std::begin(kCommands), std::end(kCommands),
                   [&](const char* c) { return cmd == c; }) == std::end(kCommands)) {
    err << "error: unknown command '" << cmd << "'\n" << kUsage;
    return 2;
  }
  if ((flag_full || flag_reduced) && cmd != "check-ideal") {
    err << "error: --full and --reduced only apply to check-ideal\n";
    return 2;
  }
  if (flag_full && flag_reduced) {
    err << "error: --full and --reduced exclude each other\n";
    return 2;
  }
  return run_parsed(cmd, rest[1], {rest.begin() + 2, rest.end()}, witness, flag_full,
                    flag_reduced, out, err);
}

}  // namespace dgideal
