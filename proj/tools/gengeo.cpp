#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "gengeo/algebroid.hpp"
#include "gengeo/document.hpp"
#include "gengeo/hodge.hpp"

namespace {

using gengeo::FrameDocument;
using gengeo::GCStructure;
using gengeo::InputError;
using gengeo::MathError;
using gengeo::StructureSpec;
using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMathFail = 1;
constexpr int kInputError = 2;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

const char* yesno(bool v) { return v ? "yes" : "no"; }
const char* passfail(bool v) { return v ? "PASS" : "FAIL"; }

struct Options {
  std::string file;
  std::string format = "text";
  std::string mode = "exact";
  double tol = 1e-9;
  bool twisted = false;
  int which = 1;
};

bool json_out(const Options& o) { return o.format == "json"; }

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

FrameDocument load(const Options& o) { return gengeo::load_frame_document(o.file); }

/// Structure picked by --which (1-based); input error when out of range.
const StructureSpec& pick_structure(const FrameDocument& doc, int which) {
  if (which < 1 || which > static_cast<int>(doc.structures.size()))
    throw InputError("--which " + std::to_string(which) + ": document has " +
                     std::to_string(doc.structures.size()) + " structure(s)");
  return doc.structures[which - 1];
}

std::pair<GCStructure, GCStructure> pick_pair(const FrameDocument& doc) {
  if (doc.structures.size() < 2)
    throw InputError("command requires a document with at least two structures");
  return {gengeo::realize(doc.structures[0]), gengeo::realize(doc.structures[1])};
}

// ---------------------------------------------------------------- validate

int cmd_validate(const Options& o) {
  FrameDocument doc = load(o);
  gengeo::FrameReport frep = gengeo::validate_frame(doc.frame);
  bool all = frep.all_pass();

  struct SRow {
    int index;
    std::string kind;
    bool valid = false;
    std::string detail;
    int type = 0;
    bool integrable = false;
  };
  std::vector<SRow> rows;
  std::vector<GCStructure> realized;
  for (std::size_t s = 0; s < doc.structures.size(); ++s) {
    SRow row{static_cast<int>(s) + 1, doc.structures[s].kind_name()};
    try {
      GCStructure j = gengeo::realize(doc.structures[s]);
      row.valid = true;
      row.type = gengeo::type_of(j);
      auto integ = gengeo::check_integrability(j, doc.frame);
      row.integrable = integ.integrable;
      if (!integ.integrable) row.detail = integ.witness;
      realized.push_back(j);
    } catch (const MathError& e) {
      row.detail = e.what();
    } catch (const InputError& e) {
      row.detail = e.what();
    }
    if (!row.valid || !row.integrable) all = false;
    rows.push_back(row);
  }

  std::optional<gengeo::GKReport> pair_rep;
  if (realized.size() >= 2 && rows[0].valid && rows[1].valid) {
    pair_rep = gengeo::gk_validate({realized[0], realized[1]}, doc.frame);
    if (!pair_rep->all_pass()) all = false;
  }

  if (json_out(o)) {
    ordered_json j;
    j["document"] = doc.name;
    j["dim"] = doc.frame.dim;
    j["frame_checks"] = ordered_json::array();
    for (const auto& c : frep.checks)
      j["frame_checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["structures"] = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json s{{"index", r.index}, {"kind", r.kind}, {"valid", r.valid}};
      if (r.valid) {
        s["type"] = r.type;
        s["integrable"] = r.integrable;
      }
      s["detail"] = r.detail;
      j["structures"].push_back(s);
    }
    if (pair_rep) {
      ordered_json p;
      p["checks"] = ordered_json::array();
      for (const auto& c : pair_rep->checks)
        p["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      p["types"] = {pair_rep->types.first, pair_rep->types.second};
      p["pass"] = pair_rep->all_pass();
      j["pair"] = p;
    }
    j["pass"] = all;
    emit(j);
  } else {
    std::cout << "document: " << (doc.name.empty() ? "(unnamed)" : doc.name) << " (dim "
              << doc.frame.dim << ")\n";
    std::cout << "frame checks:\n";
    for (const auto& c : frep.checks) {
      std::cout << "  " << c.name << ": " << passfail(c.pass);
      if (!c.pass && !c.detail.empty()) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
    }
    for (const auto& r : rows) {
      std::cout << "structure " << r.index << " (" << r.kind << "): ";
      if (!r.valid) {
        std::cout << "INVALID (" << r.detail << ")\n";
      } else {
        std::cout << "valid, type " << r.type << ", "
                  << (r.integrable ? "integrable" : "NOT integrable");
        if (!r.integrable) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
      }
    }
    if (pair_rep) {
      std::cout << "pair (1, 2):\n";
      for (const auto& c : pair_rep->checks) {
        std::cout << "  " << c.name << ": " << passfail(c.pass);
        if (!c.pass && !c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
      }
      std::cout << "  types: (" << pair_rep->types.first << ", " << pair_rep->types.second
                << ")\n";
    }
    std::cout << "result: " << passfail(all) << "\n";
  }
  return all ? kOk : kMathFail;
}

// -------------------------------------------------------------- cohomology

int cmd_cohomology(const Options& o) {
  FrameDocument doc = load(o);
  const int m = doc.frame.dim;

  std::vector<int> betti;
  std::pair<int, int> parity{0, 0};
  if (o.twisted) {
    parity = gengeo::twisted_betti(doc.frame);
  } else {
    betti = gengeo::betti_numbers(doc.frame);
  }

  bool agreement = true;
  std::optional<gengeo::KernelDims> kernel;
  if (o.mode == "float") {
    gengeo::FrameSpec frame = doc.frame;
    if (!o.twisted) frame.H = gengeo::FormSpinor(m);  // untwisted kernel
    gengeo::QMatrix g = frame.g ? *frame.g : gengeo::QMatrix::identity(m);
    gengeo::QMatrix b = frame.b ? *frame.b : gengeo::QMatrix::zero(m, m);
    gengeo::BISpace space =
        gengeo::make_bispace(frame, gengeo::make_gen_metric(g, b), o.tol);
    kernel = gengeo::laplacian_kernel_dims(space);
    if (o.twisted) {
      agreement = kernel->even == parity.first && kernel->odd == parity.second;
    } else {
      int ev = 0, od = 0;
      for (std::size_t k = 0; k < betti.size(); ++k) (k % 2 == 0 ? ev : od) += betti[k];
      agreement = kernel->even == ev && kernel->odd == od;
      if (kernel->per_degree) {
        for (std::size_t k = 0; k < betti.size(); ++k)
          if ((*kernel->per_degree)[k] != betti[k]) agreement = false;
      }
    }
  }

  if (json_out(o)) {
    ordered_json j;
    j["document"] = doc.name;
    j["twisted"] = o.twisted;
    j["mode"] = o.mode;
    if (o.twisted) {
      j["betti_even"] = parity.first;
      j["betti_odd"] = parity.second;
    } else {
      j["betti"] = betti;
      int chi = 0;
      for (std::size_t k = 0; k < betti.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * betti[k];
      j["euler"] = chi;
    }
    if (kernel) {
      ordered_json fj;
      fj["tol"] = fmt(o.tol);
      fj["kernel_even"] = kernel->even;
      fj["kernel_odd"] = kernel->odd;
      if (kernel->per_degree) fj["kernel_per_degree"] = *kernel->per_degree;
      fj["agreement"] = agreement;
      j["float_check"] = fj;
    }
    emit(j);
  } else {
    std::cout << "cohomology of (frame, " << (o.twisted ? "d_H" : "d") << "), mode " << o.mode
              << "\n";
    if (o.twisted) {
      std::cout << "b_even = " << parity.first << "\n";
      std::cout << "b_odd = " << parity.second << "\n";
    } else {
      int chi = 0;
      for (std::size_t k = 0; k < betti.size(); ++k) {
        std::cout << "b_" << k << " = " << betti[k] << "\n";
        chi += (k % 2 == 0 ? 1 : -1) * betti[k];
      }
      std::cout << "euler characteristic = " << chi << "\n";
    }
    if (kernel) {
      std::cout << "float laplacian kernel (tol " << fmt(o.tol) << "): even " << kernel->even
                << ", odd " << kernel->odd;
      if (kernel->per_degree) {
        std::cout << ", per degree";
        for (int d : *kernel->per_degree) std::cout << " " << d;
      }
      std::cout << "\n";
      std::cout << "agreement with exact ranks: " << yesno(agreement) << "\n";
    }
  }
  return agreement ? kOk : kMathFail;
}

// ----------------------------------------------------------------- diamond

int cmd_diamond(const Options& o) {
  FrameDocument doc = load(o);
  auto [j1, j2] = pick_pair(doc);
  gengeo::GKPair pair{j1, j2};
  gengeo::GKReport gk = gengeo::gk_validate(pair, doc.frame);
  if (!gk.all_pass()) {
    if (json_out(o)) {
      ordered_json j;
      j["document"] = doc.name;
      j["generalized_kahler"] = false;
      j["checks"] = ordered_json::array();
      for (const auto& c : gk.checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      emit(j);
    } else {
      std::cout << "pair (1, 2) is not generalized Kahler:\n";
      for (const auto& c : gk.checks)
        if (!c.pass) std::cout << "  " << c.name << ": FAIL (" << c.detail << ")\n";
      std::cout << "result: FAIL\n";
    }
    return kMathFail;
  }

  gengeo::HodgeReport rep = gengeo::hodge_diamond(pair, doc.frame, o.tol);

  if (json_out(o)) {
    ordered_json j;
    j["document"] = doc.name;
    j["generalized_kahler"] = true;
    j["n"] = rep.n;
    j["types"] = {rep.types.first, rep.types.second};
    j["diamond"] = ordered_json::array();
    for (const auto& e : rep.entries)
      j["diamond"].push_back({{"p", e.p}, {"q", e.q}, {"dim", e.dim}});
    j["total"] = rep.total;
    j["betti_even"] = rep.betti_even;
    j["betti_odd"] = rep.betti_odd;
    j["totals_match"] = rep.totals_match;
    j["conjugation_symmetric"] = rep.conj_symmetric;
    j["parity_consistent"] = rep.parity_consistent;
    j["max_offblock_residual"] = fmt(rep.max_offblock_residual);
    j["pass"] = rep.pass;
    emit(j);
  } else {
    std::cout << "generalized Kahler pair (structures 1, 2): types (" << rep.types.first << ", "
              << rep.types.second << "), n = " << rep.n << "\n";
    std::cout << "Hodge diamond h^{p,q} (p horizontal, q vertical):\n";
    std::cout << "  q\\p |";
    for (int p = -rep.n; p <= rep.n; ++p) std::printf("%4d", p);
    std::cout << "\n";
    char cell[16];
    for (int q = rep.n; q >= -rep.n; --q) {
      std::snprintf(cell, sizeof cell, "%5d |", q);
      std::string row = cell;
      for (int p = -rep.n; p <= rep.n; ++p) {
        bool support = std::abs(p) + std::abs(q) <= rep.n && ((p + q) - rep.n) % 2 == 0;
        if (!support) {
          row += "    ";
          continue;
        }
        int dim = 0;
        for (const auto& e : rep.entries)
          if (e.p == p && e.q == q) dim = e.dim;
        std::snprintf(cell, sizeof cell, "%4d", dim);
        row += cell;
      }
      while (!row.empty() && row.back() == ' ') row.pop_back();
      std::cout << row << "\n";
    }
    std::cout << "total = " << rep.total << "\n";
    std::cout << "twisted Betti: even " << rep.betti_even << ", odd " << rep.betti_odd
              << ", sum " << rep.betti_even + rep.betti_odd << "\n";
    std::cout << "totals match: " << yesno(rep.totals_match) << "\n";
    std::cout << "conjugation symmetry h^{p,q} = h^{-p,-q}: " << yesno(rep.conj_symmetric)
              << "\n";
    std::cout << "type parity constraint on Betti numbers: "
              << (rep.parity_consistent ? "satisfied" : "violated") << "\n";
    std::cout << "result: " << passfail(rep.pass) << "\n";
  }
  return rep.pass ? kOk : kMathFail;
}

// -------------------------------------------------------------- identities

int cmd_identities(const Options& o) {
  FrameDocument doc = load(o);
  auto [j1, j2] = pick_pair(doc);
  gengeo::GKPair pair{j1, j2};
  gengeo::IdentityResiduals res = gengeo::kahler_identities_check(pair, doc.frame, o.tol);
  bool pass = res.pass(o.tol);

  struct Row {
    const char* name;
    double value;
  } rows[] = {
      {"split ||d_H - (deltabar_+ + deltabar_- + delta_+ + delta_-)||", res.split},
      {"adjoint ||(deltabar_+)* + delta_+||", res.kahler_plus},
      {"adjoint ||(deltabar_-)* - delta_-||", res.kahler_minus},
      {"laplacian ||Delta_dH - 2 Delta_dbar1||", res.laplacian_2x},
      {"laplacian ||Delta_dH - 4 Delta_deltabar+||", res.laplacian_4x},
  };

  if (json_out(o)) {
    ordered_json j;
    j["document"] = doc.name;
    j["tol"] = fmt(o.tol);
    j["residuals"] = ordered_json::array();
    for (const auto& r : rows)
      j["residuals"].push_back(
          {{"name", r.name}, {"value", fmt(r.value)}, {"pass", r.value <= o.tol}});
    j["pass"] = pass;
    emit(j);
  } else {
    std::cout << "generalized Kahler identities (structures 1, 2), tolerance " << fmt(o.tol)
              << "\n";
    for (const auto& r : rows)
      std::cout << r.name << " = " << fmt(r.value) << " " << passfail(r.value <= o.tol) << "\n";
    std::cout << "result: " << passfail(pass) << "\n";
  }
  return pass ? kOk : kMathFail;
}

// -------------------------------------------------------------------- ddj

int cmd_ddj(const Options& o) {
  FrameDocument doc = load(o);
  const StructureSpec& spec = pick_structure(doc, o.which);
  GCStructure j = gengeo::realize(spec);
  gengeo::DdjReport rep = gengeo::ddj_check(j, doc.frame);

  if (json_out(o)) {
    ordered_json out;
    out["document"] = doc.name;
    out["structure"] = o.which;
    out["kind"] = spec.kind_name();
    out["type"] = gengeo::type_of(j);
    out["dim_ddj_image"] = rep.dim_ddj_image;
    out["dim_closed_jexact"] = rep.dim_closed_jexact;
    out["dim_jclosed_exact"] = rep.dim_jclosed_exact;
    out["contained"] = rep.contained;
    out["holds"] = rep.holds;
    if (!rep.note.empty()) out["note"] = rep.note;
    emit(out);
  } else {
    std::cout << "structure " << o.which << " (" << spec.kind_name() << "), type "
              << gengeo::type_of(j) << "\n";
    std::cout << "dim im(d_H d^J) = " << rep.dim_ddj_image << "\n";
    std::cout << "dim ker(d_H) cap im(d^J) = " << rep.dim_closed_jexact << "\n";
    std::cout << "dim ker(d^J) cap im(d_H) = " << rep.dim_jclosed_exact << "\n";
    std::cout << "im(d_H d^J) contained in both: " << yesno(rep.contained) << "\n";
    if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
    std::cout << "dd^J property: " << (rep.holds ? "holds" : "fails") << "\n";
  }
  return rep.holds ? kOk : kMathFail;
}

// ------------------------------------------------------------------ deform

int cmd_deform(const Options& o) {
  FrameDocument doc = load(o);
  const StructureSpec& spec = pick_structure(doc, o.which);
  GCStructure j = gengeo::realize(spec);
  std::optional<gengeo::QMatrix> complex_j;
  if (spec.kind == StructureSpec::Kind::Complex) complex_j = spec.matrix;
  gengeo::DeformationReport rep = gengeo::deformation_report(j, doc.frame, complex_j);

  if (json_out(o)) {
    ordered_json out;
    out["document"] = doc.name;
    out["structure"] = o.which;
    out["kind"] = spec.kind_name();
    out["h"] = rep.h;
    out["deformations"] = rep.deformations;
    out["obstruction_space"] = rep.obstructions;
    out["unobstructed_by_dimension"] = rep.unobstructed;
    if (rep.complex_split)
      out["h2_split"] = {{"H2_O", (*rep.complex_split)[0]},
                         {"H1_T", (*rep.complex_split)[1]},
                         {"H0_Lambda2T", (*rep.complex_split)[2]}};
    emit(out);
  } else {
    std::cout << "structure " << o.which << " (" << spec.kind_name()
              << "): deformation complex of the +i eigenbundle\n";
    for (std::size_t k = 0; k < rep.h.size(); ++k)
      std::cout << "h^" << k << " = " << rep.h[k] << "\n";
    std::cout << "deformations (h^2) = " << rep.deformations << "\n";
    if (rep.obstructions == 0)
      std::cout << "no obstruction space (h^3 = 0)\n";
    else
      std::cout << "obstruction space (h^3) = " << rep.obstructions << "\n";
    std::cout << "unobstructed by dimension: " << yesno(rep.unobstructed) << "\n";
    if (rep.complex_split)
      std::cout << "h^2 split: H^2(O) = " << (*rep.complex_split)[0] << ", H^1(T) = "
                << (*rep.complex_split)[1] << ", H^0(Lambda^2 T) = " << (*rep.complex_split)[2]
                << "\n";
  }
  return kOk;
}

// --------------------------------------------------------------- lefschetz

int cmd_lefschetz(const Options& o) {
  FrameDocument doc = load(o);
  int index = -1;
  for (std::size_t s = 0; s < doc.structures.size(); ++s)
    if (doc.structures[s].kind == StructureSpec::Kind::Symplectic) {
      index = static_cast<int>(s);
      break;
    }
  if (index < 0) throw InputError("lefschetz requires a symplectic structure in the document");
  gengeo::LefschetzReport rep = gengeo::lefschetz_check(doc.structures[index].matrix, doc.frame);
  const int n = doc.frame.dim / 2;

  if (json_out(o)) {
    ordered_json out;
    out["document"] = doc.name;
    out["structure"] = index + 1;
    out["entries"] = ordered_json::array();
    for (const auto& e : rep.entries)
      out["entries"].push_back({{"k", e.k},
                                {"b_low", e.b_low},
                                {"b_high", e.b_high},
                                {"rank_induced", e.rank_induced},
                                {"iso", e.iso}});
    out["holds"] = rep.holds;
    emit(out);
  } else {
    std::cout << "symplectic structure " << index + 1 << "\n";
    for (const auto& e : rep.entries)
      std::cout << "k = " << e.k << ": dim H^" << n - e.k << " = " << e.b_low << ", dim H^"
                << n + e.k << " = " << e.b_high << ", induced rank = " << e.rank_induced
                << ", iso: " << yesno(e.iso) << "\n";
    std::cout << "strong Lefschetz: " << (rep.holds ? "holds" : "fails") << "\n";
  }
  return rep.holds ? kOk : kMathFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized-geometry calculator for Lie algebra frames"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", o.file, "frame document (JSON)")->required();
    cmd->add_option("--format", o.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--tol", o.tol, "float tolerance (default 1e-9)");
  };

  CLI::App* validate = app.add_subcommand("validate", "structural checks of a frame document");
  add_common(validate);

  CLI::App* cohomology = app.add_subcommand("cohomology", "Betti numbers by exact ranks");
  add_common(cohomology);
  cohomology->add_flag("--twisted", o.twisted, "use d_H and report even/odd dimensions");
  cohomology->add_option("--mode", o.mode, "exact or float (adds a Laplacian cross-check)")
      ->check(CLI::IsMember({"exact", "float"}));

  CLI::App* diamond = app.add_subcommand("diamond", "generalized Kahler Hodge diamond");
  add_common(diamond);

  CLI::App* identities =
      app.add_subcommand("identities", "generalized Kahler identities (residuals)");
  add_common(identities);

  CLI::App* ddj = app.add_subcommand("ddj", "dd^J property by exact rank arithmetic");
  add_common(ddj);
  ddj->add_option("--which", o.which, "structure index (1-based)");

  CLI::App* deform = app.add_subcommand("deform", "Lie algebroid deformation complex");
  add_common(deform);
  deform->add_option("--which", o.which, "structure index (1-based)");

  CLI::App* lefschetz = app.add_subcommand("lefschetz", "strong Lefschetz property");
  add_common(lefschetz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(o);
    if (app.got_subcommand(cohomology)) return cmd_cohomology(o);
    if (app.got_subcommand(diamond)) return cmd_diamond(o);
    if (app.got_subcommand(identities)) return cmd_identities(o);
    if (app.got_subcommand(ddj)) return cmd_ddj(o);
    if (app.got_subcommand(deform)) return cmd_deform(o);
    if (app.got_subcommand(lefschetz)) return cmd_lefschetz(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMathFail;
  }
  return kInputError;
}
