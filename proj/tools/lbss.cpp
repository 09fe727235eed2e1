// lbss: command-line front end for DGL presentations, their enveloping
// algebras and Bockstein spectral sequences.

#include "lbss/dgl_io.hpp"
#include "lbss/examples.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace lbss;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kMathFailure = 1, kInputError = 2;

struct Output {
  std::ostringstream text;
  json data = json::object();
  std::vector<std::string> warnings;
  int code = kOk;
};

struct Loaded {
  std::string label;
  DglFile file;
  DgLie<PLocal> lie{3};
  int nmax = 0;
};

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

Loaded load(const std::string& path, unsigned prime, int nmax) {
  Loaded l;
  l.label = stem(path);
  l.file = read_dgl(path);
  l.lie = to_lie(l.file, prime, path);
  l.nmax = nmax ? nmax : l.file.nmax;
  return l;
}

std::string generator_list(const DgLie<PLocal>& L) {
  std::string out;
  for (int i = 0; i < L.size(); ++i)
    out += (i ? " " : "") + L.generator(i).name + "(" + std::to_string(L.degree(i)) + ")";
  return out;
}

json generators_json(const DgLie<PLocal>& L) {
  json out = json::array();
  for (int i = 0; i < L.size(); ++i) out.push_back({{"name", L.generator(i).name}, {"degree", L.degree(i)}});
  return out;
}

int max_degree(const DgLie<PLocal>& L, bool even_only) {
  int d = 0;
  for (int i = 0; i < L.size(); ++i)
    if (!even_only || L.degree(i) % 2 == 0) d = std::max(d, L.degree(i));
  return d;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Smallest N_max that shows the page-rmax generators and their beta partners.
int suggested_nmax(const DgLie<PLocal>& L, bool ul, int rmax) {
  if (!ul) return max_degree(L, false) + 2;
  int d = max_degree(L, true);
  if (d == 0) d = 2 * max_degree(L, false);
  return static_cast<int>(d * ipow(L.prime(), rmax - 1)) + 2;
}

// Returns false (and fills out) when L is not a valid DGL.
bool check_valid(const DgLie<PLocal>& L, Output& out) {
  auto rep = validate(L);
  if (rep.ok()) return true;
  out.text << "invalid DGL:\n";
  json v = json::array();
  for (const auto& x : rep.violations) {
    out.text << "  " << x.identity << ": " << x.witness << "\n";
    v.push_back({{"identity", x.identity}, {"witness", x.witness}});
  }
  out.data["valid"] = false;
  out.data["violations"] = v;
  out.code = kMathFailure;
  return false;
}

std::string group_text(const HomologyGroup& g, unsigned p) {
  std::vector<std::string> parts;
  if (g.betti == 1) parts.push_back("Z_(p)");
  if (g.betti > 1) parts.push_back("Z_(p)^" + std::to_string(g.betti));
  for (int k : g.torsion) parts.push_back("Z/" + std::to_string(p) + (k > 1 ? "^" + std::to_string(k) : ""));
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

std::string collapse_text(int s) {
  if (s <= 1) return "collapsed at page 1";
  return "collapses after page " + std::to_string(s - 1);
}

// ---------------------------------------------------------------- commands

Output cmd_validate(const std::string& path, unsigned prime) {
  Output out;
  Loaded l = load(path, prime, 0);
  out.data["file"] = l.label;
  out.data["prime"] = l.lie.prime();
  out.data["generators"] = generators_json(l.lie);
  out.text << "validate: " << l.label << ", p = " << l.lie.prime() << "\n";
  out.text << "generators: " << generator_list(l.lie) << "\n";
  if (check_valid(l.lie, out)) {
    out.text << "valid: yes\n";
    out.data["valid"] = true;
  }
  return out;
}

ChainComplex<PLocal> target_complex(const Loaded& l, bool ul) {
  if (ul) return PbwAlgebra<PLocal>(l.lie, l.nmax).complex();
  return l.lie.complex(l.nmax);
}

Output cmd_homology(const std::string& path, unsigned prime, int nmax, const std::string& target) {
  Output out;
  Loaded l = load(path, prime, nmax);
  const bool ul = target == "ul";
  if (!l.nmax) l.nmax = suggested_nmax(l.lie, ul, 1);
  if (!check_valid(l.lie, out)) return out;
  auto c = target_complex(l, ul);
  auto h = homology(c);
  auto modp = mod_p_homology_dims(c);
  const std::string what = ul ? "UL" : "L";
  out.text << "homology: " << what << "(" << l.label << "), p = " << l.lie.prime() << ", N_max = " << l.nmax
           << ", degrees 0.." << h.window() << "\n";
  out.data["file"] = l.label;
  out.data["target"] = target;
  out.data["prime"] = l.lie.prime();
  out.data["nmax"] = l.nmax;
  json groups = json::array();
  for (int n = 0; n <= h.window(); ++n) {
    const auto& g = h.at(n);
    out.text << "  H_" << n << " = " << group_text(g, l.lie.prime()) << "   [dim over F_p: " << modp[static_cast<std::size_t>(n)]
             << "]\n";
    groups.push_back({{"degree", n}, {"free", g.betti}, {"torsion_exponents", g.torsion},
                      {"mod_p_dim", modp[static_cast<std::size_t>(n)]}});
  }
  out.data["homology"] = groups;
  return out;
}

void page_report(const SpectralPage& page, Output& out, json& pages) {
  const int r = page.r;
  out.text << "page " << r << "\n";
  json degrees = json::array();
  for (int n = 0; n <= page.window; ++n) {
    if (page.dim(n) == 0) continue;
    std::vector<std::string> names;
    for (const auto& c : page.classes[static_cast<std::size_t>(n)]) names.push_back(c.name);
    Mat<Fp> out_beta = page.beta.block(n);
    Mat<Fp> in_beta = n + 1 <= page.window ? page.beta.block(n + 1) : zeros<Fp>(page.dim(n), 0);
    const int rank_out = out_beta.size() ? rank<Fp>(out_beta, page.p) : 0;
    const int rank_in = in_beta.size() ? rank<Fp>(in_beta, page.p) : 0;
    const int survive = page.dim(n) - rank_out - rank_in;
    out.text << "  E^" << r << "_" << n << " (dim " << page.dim(n) << ", survives " << survive << "):";
    for (const auto& s : names) out.text << " [" << s << "]";
    out.text << "\n";
    json arrows = json::array();
    if (n >= 1)
      for (int i = 0; i < page.dim(n); ++i) {
        Vec<Fp> img = out_beta.col(i);
        if (is_zero(img)) continue;
        std::string rhs = render(img, page.basis().names(n - 1));
        out.text << "    beta^" << r << "[" << names[static_cast<std::size_t>(i)] << "] = " << rhs << "\n";
        arrows.push_back({{"source", names[static_cast<std::size_t>(i)]}, {"image", rhs}});
      }
    degrees.push_back({{"degree", n}, {"classes", names}, {"paired_out", rank_out}, {"paired_in", rank_in},
                       {"surviving", survive}, {"beta", arrows}});
  }
  pages.push_back({{"r", r}, {"degrees", degrees}});
}

Output bss_report(Loaded l, const std::string& target, int rmax, bool theorem3) {
  Output out;
  const bool ul = target == "ul";
  const int needed = suggested_nmax(l.lie, ul, rmax);
  if (!l.nmax) l.nmax = needed;
  if (!check_valid(l.lie, out)) return out;
  if (l.nmax < needed)
    out.warnings.push_back("N_max = " + std::to_string(l.nmax) + " may hide torsion needed for page " +
                           std::to_string(rmax) + "; use N_max >= " + std::to_string(needed));
  BssResult bss(target_complex(l, ul), rmax);
  const std::string what = ul ? "UL" : "L";
  out.text << "bss: " << what << "(" << l.label << "), p = " << l.lie.prime() << ", N_max = " << l.nmax
           << ", degrees 0.." << bss.window() << ", pages 1.." << rmax << "\n";
  out.data["file"] = l.label;
  out.data["target"] = target;
  out.data["prime"] = l.lie.prime();
  out.data["nmax"] = l.nmax;
  out.data["rmax"] = rmax;
  json pages = json::array();
  for (const auto& page : bss.pages()) page_report(page, out, pages);
  out.data["pages"] = pages;
  const std::string collapse = collapse_text(bss.stable_from());
  out.text << "collapse: " << collapse << " (within degrees 0.." << bss.window() << ")\n";
  out.data["collapse"] = collapse;
  out.data["stable_from"] = bss.stable_from();

  if (theorem3) {
    if (!ul) out.warnings.push_back("--check-theorem3 looks at the pages of UL; ignoring --target lie for the checks");
    auto rep = verify_theorem3(l.lie, l.nmax, rmax);
    out.text << "page structure checks (degrees 0.." << rep.window << ")\n";
    json checks = json::array();
    for (const auto& c : rep.pages) {
      out.text << "  page " << c.r << ": (a) " << (c.closed_under_beta ? "ok" : "FAIL") << "  (b) "
               << (c.hilbert_matches ? "ok" : "FAIL") << "  (c) " << (c.image_primitive ? "ok" : "FAIL")
               << "  Lie part:";
      json lie = json::object();
      for (std::size_t n = 0; n < c.lie_dims.size(); ++n)
        if (c.lie_dims[n]) {
          out.text << " " << n << ":" << c.lie_dims[n];
          lie[std::to_string(n)] = c.lie_dims[n];
        }
      out.text << "\n";
      for (const auto& f : c.failures) out.text << "    " << f << "\n";
      checks.push_back({{"r", c.r}, {"a", c.closed_under_beta}, {"b", c.hilbert_matches}, {"c", c.image_primitive},
                        {"lie_part", lie}, {"page_dims", c.page_dims}, {"primitive_dims", c.primitive_dims},
                        {"failures", c.failures}});
    }
    out.data["theorem3"] = {{"ok", rep.ok()}, {"pages", checks}};
    if (!rep.ok()) out.code = kMathFailure;
  }
  return out;
}

Output cmd_bss(const std::string& path, unsigned prime, int nmax, const std::string& target, int rmax,
               bool theorem3) {
  return bss_report(load(path, prime, nmax), target, rmax, theorem3);
}

template <ExactScalar S>
std::string element_text(const LambdaAlgebra<S>& A, const Element<S>& u) {
  if (u.empty()) return "0";
  const int n = A.degree(u.begin()->first);
  return render(A.coords(u, n), A.basis().names(n));
}

Output cmd_cochains(const std::string& path, unsigned prime, int nmax) {
  Output out;
  Loaded l = load(path, prime, nmax);
  if (!l.nmax) l.nmax = 2 * max_degree(l.lie, false) + 2;
  if (!check_valid(l.lie, out)) return out;
  out.data["file"] = l.label;
  out.data["prime"] = l.lie.prime();
  out.data["nmax"] = l.nmax;
  try {
    auto C = cochains(l.lie, l.nmax);
    const auto& A = C.algebra.algebra();
    out.text << "cochains: C*(" << l.label << "), p = " << l.lie.prime() << ", N_max = " << l.nmax << "\n";
    out.text << "  V:";
    json gens = json::array();
    for (int i = 0; i < A.generators(); ++i) {
      out.text << " " << A.generator_names()[static_cast<std::size_t>(i)] << "("
               << A.monomial_basis().generator_degree(i) << ")";
    }
    out.text << "\n";
    for (int i = 0; i < A.generators(); ++i) {
      const auto& name = A.generator_names()[static_cast<std::size_t>(i)];
      std::string d = element_text(A, C.algebra.d_generators()[static_cast<std::size_t>(i)]);
      out.text << "  d(" << name << ") = " << d << "\n";
      gens.push_back({{"name", name}, {"degree", A.monomial_basis().generator_degree(i)}, {"d", d}});
    }
    bool minimal = true, d1_zero = true;
    for (int n = 0; n <= l.nmax; ++n) {
      Mat<PLocal> b0 = C.d0.block(n), b1 = C.d1.block(n);
      for (Eigen::Index i = 0; i < b0.rows(); ++i)
        for (Eigen::Index j = 0; j < b0.cols(); ++j)
          if (!b0(i, j).is_zero() && b0(i, j).valuation() == 0) minimal = false;
      if (!is_zero(b1)) d1_zero = false;
    }
    out.text << "  d0 = 0 mod p (minimal): " << (minimal ? "yes" : "no") << "\n";
    out.text << "  d1 = 0 (abelian): " << (d1_zero ? "yes" : "no") << "\n";
    out.text << "  d^2 = 0 through degree " << l.nmax << ": yes\n";
    out.data["generators"] = gens;
    out.data["minimal"] = minimal;
    out.data["d1_zero"] = d1_zero;
    out.data["d_squared_zero"] = true;
  } catch (const ComplexError& e) {
    out.text << "d^2 != 0: " << e.what() << "\n";
    out.data["d_squared_zero"] = false;
    out.data["error"] = e.what();
    out.code = kMathFailure;
  }
  return out;
}

Output check_morphism(const std::string& src_label, const DgLie<PLocal>& src, const std::string& tgt_label,
                      const DgLie<PLocal>& tgt, const MapFile& map, const std::string& map_label, int top) {
  Output out;
  const unsigned p = src.prime();
  out.text << "check-morphism: " << src_label << " -> " << tgt_label << " via " << map_label << ", p = " << p
           << ", over F_p, degrees 0.." << top << "\n";
  out.data["source"] = src_label;
  out.data["target"] = tgt_label;
  out.data["map"] = map_label;
  out.data["prime"] = p;
  out.data["top"] = top;
  PbwAlgebra<Fp> U1(reduce(src), top), U2(reduce(tgt), top);
  auto images = map_images(map, U1.lie(), U2, map_label);
  json imgs = json::object();
  for (int i = 0; i < U1.lie().size(); ++i) {
    std::string e = emit_expr(to_expr(U2, images[static_cast<std::size_t>(i)]));
    out.text << "  " << U1.lie().generator(i).name << " -> " << e << "\n";
    imgs[U1.lie().generator(i).name] = e;
  }
  out.data["images"] = imgs;
  std::optional<HopfMorphism<Fp>> phi;
  try {
    phi = hopf_morphism(U1, U2, images);
  } catch (const std::invalid_argument& e) {
    out.text << "Hopf morphism: no (" << e.what() << ")\n";
    out.data["hopf"] = false;
    out.data["error"] = e.what();
    out.code = kMathFailure;
    return out;
  }
  out.text << "Hopf morphism: yes\n";
  out.data["hopf"] = true;
  auto v = is_lie_type(*phi);
  out.text << "phi(L1) in L2 (matrix check): " << (v.direct ? "yes" : "no");
  if (!v.direct) out.text << ", " << v.direct_witness;
  out.text << "\n";
  out.text << "dual is a Gamma-morphism: " << (v.dual.ok ? "yes" : "no");
  if (!v.dual.ok) {
    out.text << ", " << v.dual.witness;
    if (v.dual.k > 0) out.text << " [witness (" << v.dual.element << ", " << v.dual.k << ")]";
  }
  out.text << "\n";
  out.text << "detectors agree: " << (v.agree() ? "yes" : "NO") << "\n";
  out.text << "lie type: " << (v.direct && v.dual.ok ? "yes" : "no") << "\n";
  out.data["direct"] = {{"ok", v.direct}, {"witness", v.direct_witness}};
  out.data["dual"] = {{"ok", v.dual.ok}, {"witness", v.dual.witness}, {"element", v.dual.element}, {"k", v.dual.k}};
  out.data["agree"] = v.agree();
  out.data["lie_type"] = v.direct && v.dual.ok;
  if (!v.agree()) out.code = kMathFailure;
  return out;
}

Output cmd_check_morphism(const std::string& f1, const std::string& f2, const std::string& mapfile, unsigned prime,
                          int nmax) {
  Loaded a = load(f1, prime, nmax), b = load(f2, prime, nmax);
  if (a.lie.prime() != b.lie.prime()) throw ParseError(f2, 0, "source and target use different primes");
  Output bad;
  if (!check_valid(a.lie, bad) || !check_valid(b.lie, bad)) return bad;
  int top = nmax;
  if (!top) {
    if (!a.nmax && !b.nmax) throw ParseError(f1, 0, "no nmax in either file (pass --nmax)");
    top = !a.nmax ? b.nmax : !b.nmax ? a.nmax : std::min(a.nmax, b.nmax);
  }
  return check_morphism(a.label, a.lie, b.label, b.lie, read_map(mapfile), stem(mapfile), top);
}

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
  std::filesystem::create_directories(dir);
  std::ofstream f(std::filesystem::path(dir) / name);
  if (!f) throw ParseError(dir, 0, "cannot write " + name);
  f << content;
}

Output prop61_report(unsigned p, int n) {
  Output out;
  const int ip = static_cast<int>(p);
  const int window = 2 * n * ip + 2;
  auto model = prop61_model<Fp>(p, n, window);
  auto v = verify_quasi_iso(model.source, model.target, model.images, window);
  const auto& B = model.target.algebra();
  out.text << "prop61: p = " << p << ", n = " << n << "\n";
  out.text << "  C*(L) = (Lambda(x, y), dx = y) with x = " << B.generator_names()[0] << " (" << 2 * n << "), y = "
           << B.generator_names()[1] << " (" << 2 * n + 1 << ")\n";
  out.text << "  model: x1 -> " << element_text(B, model.images[0]) << ", y1 -> " << element_text(B, model.images[1])
           << "\n";
  out.text << "  cochain map: " << (v.cochain_map ? "yes" : "no") << "\n";
  out.text << "  quasi-isomorphism through degree " << window << ": " << (v.ok ? "yes" : "no");
  if (!v.ok) out.text << " (" << v.witness << ")";
  out.text << "\n";
  const int through = 4 * n * ip;
  PbwAlgebra<Fp> U(abelian_pair<Fp>(p, n, 1), through + 1);
  auto dims = mod_p_homology_dims(U.complex());
  auto expected = pbw_hilbert_series({2 * n * ip - 1, 2 * n * ip}, through);
  bool match = true;
  out.text << "  dim H_k(UL) over F_p, k = 0.." << through << ":";
  for (int k = 0; k <= through; ++k) {
    out.text << " " << dims[static_cast<std::size_t>(k)];
    if (dims[static_cast<std::size_t>(k)] != expected[static_cast<std::size_t>(k)]) match = false;
  }
  out.text << "\n  U L_ab(e1, f1), |e1| = " << 2 * n * ip - 1 << ", |f1| = " << 2 * n * ip << ":          ";
  for (int k = 0; k <= through; ++k) out.text << " " << expected[static_cast<std::size_t>(k)];
  out.text << "\n  Hilbert series match: " << (match ? "yes" : "no") << "\n";
  int first = 0;
  while (first <= through && (first == 0 || dims[static_cast<std::size_t>(first)] == 0)) ++first;
  out.text << "  lowest positive degrees of H(UL): " << first << ", " << first + 1 << "\n";
  out.data = {{"example", "prop61"},   {"prime", p},       {"n", n},
              {"cochain_map", v.cochain_map}, {"quasi_iso", v.ok}, {"window", window},
              {"homology_dims", std::vector<int>(dims.begin(), dims.begin() + through + 1)},
              {"expected_dims", std::vector<long>(expected.begin(), expected.end())}, {"hilbert_match", match}};
  if (!v.ok || !match) out.code = kMathFailure;
  return out;
}

Output cmd_examples(const std::string& name, unsigned p, int n, int rmax, const std::string& dir) {
  if (!p) p = 3;
  const int ip = static_cast<int>(p);
  const int nmax = static_cast<int>(2 * n * ipow(ip, rmax)) + 2;
  auto save = [&](const std::string& file, const std::string& content) {
    if (!dir.empty()) write_file(dir, file, content);
  };
  Output out;
  if (name == "example1") {
    DglFile f = from_lie(abelian_pair<PLocal>(p, n, ip), nmax);
    save("example1.dgl", emit_dgl(f));
    Loaded l;
    l.label = "example1";
    l.file = f;
    l.lie = to_lie(f);
    l.nmax = nmax;
    // pages are counted from E^1 = H(UL; F_p), so the generators in degree 2np^r live on page r + 1
    out = bss_report(std::move(l), "ul", rmax + 1, true);
  } else if (name == "example2") {
    const int top = 2 * (2 * n * ip);
    DglFile lie = from_lie(example2_lie(p, n), nmax);
    DgLie<PLocal> tgt(p);
    for (const auto& g : {std::pair<const char*, int>{"a", 2 * n * ip - 1}, {"b", 2 * n * ip}, {"c", 2 * n}})
      tgt.add_generator(g.first, g.second);
    DglFile target = from_lie(tgt, top);
    MapFile map;
    map.entries = {{"a", parse_expr("a")}, {"b", parse_expr("b + c^" + std::to_string(p))}, {"c", parse_expr("c")}};
    save("example2.dgl", emit_dgl(lie));
    save("example2_target.dgl", emit_dgl(target));
    save("example2.map", emit_map(map));
    out = check_morphism("example2_target", tgt, "example2_target", tgt, map, "example2", top);
  } else if (name == "prop61") {
    save("prop61.dgl", emit_dgl(from_lie(abelian_pair<PLocal>(p, n, 1), nmax)));
    out = prop61_report(p, n);
  } else {
    throw ParseError("examples", 0, "unknown example '" + name + "' (expected example1, example2 or prop61)");
  }
  save(name + ".expected", out.text.str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bockstein spectral sequences of DGLs and their enveloping algebras"};
  app.require_subcommand(1);
  unsigned prime = 0;
  int nmax = 0, rmax = 2, n = 1;
  bool as_json = false, theorem3 = false;
  std::string target = "ul", out_dir, file1, file2, mapfile, name;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--prime", prime, "override the prime of the file");
    sub->add_flag("--json", as_json, "machine-readable output");
  };
  auto window = [&](CLI::App* sub) { sub->add_option("--nmax", nmax, "truncation degree N_max")->check(CLI::PositiveNumber); };
  auto targets = [&](CLI::App* sub) {
    sub->add_option("--target", target, "complex: lie (L) or ul (UL)")->check(CLI::IsMember({"lie", "ul"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "check the DGL axioms");
  validate_cmd->add_option("file", file1)->required();
  common(validate_cmd);

  auto* homology_cmd = app.add_subcommand("homology", "homology over Z_(p) and mod p");
  homology_cmd->add_option("file", file1)->required();
  common(homology_cmd);
  window(homology_cmd);
  targets(homology_cmd);

  auto* bss_cmd = app.add_subcommand("bss", "Bockstein spectral sequence pages");
  bss_cmd->add_option("file", file1)->required();
  common(bss_cmd);
  window(bss_cmd);
  targets(bss_cmd);
  bss_cmd->add_option("--rmax", rmax, "last page")->check(CLI::PositiveNumber);
  bss_cmd->add_flag("--check-theorem3", theorem3, "check primitives and PBW dimensions on each page");

  auto* cochains_cmd = app.add_subcommand("cochains", "the cochain algebra C*(L)");
  cochains_cmd->add_option("file", file1)->required();
  common(cochains_cmd);
  window(cochains_cmd);

  auto* examples_cmd = app.add_subcommand("examples", "built-in examples: example1, example2, prop61");
  examples_cmd->add_option("name", name)->required()->check(CLI::IsMember({"example1", "example2", "prop61"}));
  common(examples_cmd);
  examples_cmd->add_option("--n", n, "degree parameter n")->check(CLI::PositiveNumber);
  examples_cmd->add_option("--rmax", rmax, "last page (sets N_max = 2 n p^rmax + 2)")->check(CLI::PositiveNumber);
  examples_cmd->add_option("--out", out_dir, "write the .dgl and .expected files here");

  auto* morphism_cmd = app.add_subcommand("check-morphism", "Hopf morphism UL1 -> UL2 of Lie type?");
  morphism_cmd->add_option("source", file1)->required();
  morphism_cmd->add_option("target", file2)->required();
  morphism_cmd->add_option("map", mapfile)->required();
  common(morphism_cmd);
  window(morphism_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  Output out;
  try {
    if (*validate_cmd)
      out = cmd_validate(file1, prime);
    else if (*homology_cmd)
      out = cmd_homology(file1, prime, nmax, target);
    else if (*bss_cmd)
      out = cmd_bss(file1, prime, nmax, target, rmax, theorem3);
    else if (*cochains_cmd)
      out = cmd_cochains(file1, prime, nmax);
    else if (*examples_cmd)
      out = cmd_examples(name, prime, n, rmax, out_dir);
    else
      out = cmd_check_morphism(file1, file2, mapfile, prime, nmax);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMathFailure;
  }
  for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
  if (as_json) {
    out.data["warnings"] = out.warnings;
    out.data["exit_code"] = out.code;
    std::cout << out.data.dump(2) << "\n";
  } else {
    std::cout << out.text.str();
  }
  return out.code;
}
