#include "solidtorus/cut.hpp"
#include "solidtorus/layered.hpp"
#include "solidtorus/pl.hpp"
#include "solidtorus/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace solidtorus;
using nlohmann::ordered_json;

namespace {

// Input errors detected by the tool itself rather than the library.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream ss;
  for (unsigned int k = 0; k < len; ++k) ss << std::hex << std::setw(2) << std::setfill('0') << int(digest[k]);
  return ss.str();
}

ordered_json slope_json(const Slope& s) { return ordered_json::array({s.x().str(), s.y().str()}); }

class Report {
 public:
  explicit Report(std::vector<std::string> argv) : command_(std::move(argv)) {}

  std::string read_input(const std::string& path) {
    std::string data = read_file(path);
    inputs_.push_back({{"path", path}, {"sha256", sha256_hex(data)}});
    return data;
  }

  void add(const std::string& check, Verdict v, ordered_json values, const std::string& claim = "") {
    ordered_json r;
    r["check"] = check;
    if (!claim.empty()) r["claim"] = claim;
    r["status"] = to_string(v);
    r["values"] = std::move(values);
    results_.push_back(std::move(r));
    if (v == Verdict::fail) failed_ = true;
    if (v == Verdict::inconclusive) inconclusive_ = true;
  }

  int exit_code() const { return failed_ ? 1 : inconclusive_ ? 3 : 0; }

  void emit(std::ostream& out, bool json, bool deterministic, double seconds) const {
    if (json) {
      ordered_json j;
      j["command"] = command_;
      j["inputs"] = inputs_;
      j["results"] = results_;
      if (!deterministic) j["timing"] = {{"seconds", seconds}};
      j["exit_code"] = exit_code();
      out << j.dump(2) << "\n";
      return;
    }
    for (const auto& r : results_) {
      out << r["check"].get<std::string>() << ": " << r["status"].get<std::string>();
      if (r.contains("claim")) out << "  [" << r["claim"].get<std::string>() << "]";
      out << "\n";
      for (const auto& [k, v] : r["values"].items()) out << "  " << k << " = " << v.dump() << "\n";
    }
    for (const auto& in : inputs_)
      out << "input " << in["path"].get<std::string>() << " sha256 " << in["sha256"].get<std::string>() << "\n";
    if (!deterministic) out << "time " << seconds << " s\n";
  }

 private:
  std::vector<std::string> command_;
  ordered_json inputs_ = ordered_json::array();
  ordered_json results_ = ordered_json::array();
  bool failed_ = false;
  bool inconclusive_ = false;
};

Verdict verdict(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

ordered_json disc_json(const MeridianDisc& d) {
  return {{"vector", d.vector.to_json()},
          {"boundary_length", d.boundary_length},
          {"weight", d.weight},
          {"piece_count", d.piece_count()}};
}

Triangulation load_tri(Report& rep, const std::string& path) {
  Triangulation tri = parse_tri(rep.read_input(path));
  tri.validate();
  return tri;
}

NormalVector load_disc(Report& rep, const std::string& path) {
  const auto j = nlohmann::json::parse(rep.read_input(path));
  return NormalVector::from_json(j.is_object() && j.contains("vector") ? j["vector"] : j);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layered solid tori: normal meridian discs, parallelity bundles and core curves"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false, deterministic = false;
  int jobs = 1;
  double time_limit = 600;
  app.add_flag("--json", json, "Emit the report as JSON");
  app.add_flag("--deterministic", deterministic, "Omit timing so equal inputs give identical reports");
  app.add_option("--jobs", jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--time-limit", time_limit, "Search time limit in seconds");

  long family_i = 0;
  std::string out_path, in_path, tri_path, disc_path;
  bool labels = false;
  long max_pieces = 40, window = 1000;

  auto* gen = app.add_subcommand("gen", "Write the layered solid torus T_i");
  gen->add_option("--family", family_i, "Index i")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--out", out_path, "Output .tri file")->required();
  gen->add_flag("--labels", labels, "Add edge slope comments");

  auto* validate = app.add_subcommand("validate", "Parse and validate a triangulation");
  validate->add_option("--in", in_path)->required();

  auto* homology = app.add_subcommand("homology", "First homology and boundary kernel");
  homology->add_option("--in", in_path)->required();

  auto* meridian = app.add_subcommand("meridian", "Minimal-complexity normal meridian disc");
  meridian->add_option("--in", in_path)->required();
  meridian->add_option("--max-pieces", max_pieces, "Piece-count budget")->check(CLI::NonNegativeNumber);
  meridian->add_option("--out", out_path, "Write the disc vector as JSON");

  auto* bundle = app.add_subcommand("bundle", "Cut along a disc and check the parallelity bundle");
  bundle->add_option("--in", in_path)->required();
  bundle->add_option("--disc", disc_path)->required();
  bundle->add_option("--max-pieces", max_pieces, "Budget for the minimality comparison");

  auto* curve = app.add_subcommand("curve", "Core curve construction and checks");
  curve->require_subcommand(1);
  curve->fallthrough();
  auto* make61 = curve->add_subcommand("make-61", "Single-hit loop for T_i");
  make61->add_option("--i", family_i)->required()->check(CLI::NonNegativeNumber);
  make61->add_option("--max-pieces", max_pieces);
  make61->add_option("--out", out_path, "Write the curve as JSON");
  auto* check = curve->add_subcommand("check", "Check a curve against a disc");
  check->add_option("--in", in_path)->required();
  check->add_option("--tri", tri_path)->required();
  check->add_option("--disc", disc_path)->required();

  auto* verify = app.add_subcommand("verify", "Verify a theorem instance");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* v611 = verify->add_subcommand("61-1", "Piece-count lower bound for meridian discs of T_i");
  v611->add_option("--i", family_i)->required()->check(CLI::NonNegativeNumber);
  v611->add_option("--max-pieces", max_pieces);
  auto* v612 = verify->add_subcommand("61-2", "Pre-core length bound for T_i");
  v612->add_option("--i", family_i)->required()->check(CLI::NonNegativeNumber);
  v612->add_option("--window", window)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Report rep(std::vector<std::string>(argv + 1, argv + argc));
  SearchBudget budget;
  budget.max_piece_count = max_pieces;
  budget.time_limit = time_limit;
  budget.jobs = jobs;
  const auto start = std::chrono::steady_clock::now();

  try {
    if (*gen) {
      const auto lt = family(family_i);
      std::vector<std::string> comments;
      if (labels)
        for (const auto& [cls, s] : lt.boundary_slopes) comments.push_back("edge " + std::to_string(cls) + " slope " + s.str());
      write_file(out_path, serialize_tri(lt.tri, comments));
      ordered_json triple = ordered_json::array();
      for (const auto& s : lt.triple().slopes()) triple.push_back(slope_json(s));
      rep.add("generate", Verdict::pass, {{"i", family_i}, {"tets", lt.tri.tet_count()}, {"triple", triple}});
    } else if (*validate) {
      const Triangulation tri = load_tri(rep, in_path);
      const Skeleton sk = skeleton(tri);
      const auto bc = boundary_complex(tri, sk);
      rep.add("validate", Verdict::pass,
              {{"tets", tri.tet_count()},
               {"orientable", tri.is_orientable()},
               {"vertices", sk.vertex_classes},
               {"edges", sk.edge_classes},
               {"faces", sk.face_classes},
               {"euler_characteristic", sk.euler_characteristic()},
               {"boundary_one_vertex_torus", bc.is_one_vertex_torus()}});
    } else if (*homology) {
      const Triangulation tri = load_tri(rep, in_path);
      const auto h = first_homology(tri);
      const auto st = solid_torus_candidate(tri);
      ordered_json torsion = ordered_json::array();
      for (const auto& t : h.h1_torsion) torsion.push_back(t.str());
      ordered_json values{{"h1_rank", h.h1_rank}, {"h1_torsion", torsion}};
      values["kernel_slope"] = h.boundary_map_kernel_slope ? slope_json(*h.boundary_map_kernel_slope) : ordered_json();
      values["summary"] = st.summary();
      rep.add("solid_torus_candidate", verdict(st.candidate), values);
    } else if (*meridian) {
      const Triangulation tri = load_tri(rep, in_path);
      const auto r = minimal_complexity_disc(tri, budget);
      ordered_json values{{"max_pieces", max_pieces},
                          {"length_certified", r.length_certified},
                          {"weight_certified", r.weight_certified}};
      if (r.disc) {
        values["disc"] = disc_json(*r.disc);
        if (!out_path.empty()) write_file(out_path, r.disc->vector.to_json().dump() + "\n");
      }
      rep.add("minimal_meridian_disc", r.status, values);
    } else if (*bundle) {
      const Triangulation tri = load_tri(rep, in_path);
      const NormalVector v = load_disc(rep, disc_path);
      const CutComplex x = cut_along(tri, v);
      const auto components = parallelity_bundle(tri, x);
      ordered_json comps = ordered_json::array();
      for (const auto& c : components)
        comps.push_back({{"slabs", c.slabs.size()},
                         {"base_euler", c.base_euler},
                         {"base_orientable", c.base_orientable},
                         {"meets_dminus", c.meets_dminus},
                         {"meets_dplus", c.meets_dplus},
                         {"meets_a", c.meets_a}});
      const auto claims = check_claims(tri, v, nullptr, &budget);
      const char* input = claims.input == Minimality::minimal       ? "minimal"
                          : claims.input == Minimality::not_minimal ? "not_minimal"
                                                                    : "unknown";
      rep.add("cut", Verdict::pass, {{"components", x.components}, {"euler_characteristic", x.euler_characteristic}});
      rep.add("claim_1", verdict(claims.claim1), {{"components", comps}, {"input", input}},
              "Claim 1: every parallelity bundle component is a product");
      rep.add("claim_2", verdict(claims.claim2), {{"details", claims.details}, {"input", input}},
              "Claim 2: every bundle component meeting A meets both copies of D");
    } else if (*make61) {
      const auto cert = make_61_curve(family_i, budget);
      const auto lt = family(family_i);
      const bool on_unit_edge = cert.hit_edge_label && *cert.hit_edge_label == Slope(1, 0);
      const bool ok = cert.embedded && cert.one_skeleton_hits == 1 && on_unit_edge && std::abs(cert.algebraic_pairing) == 1 &&
                      (family_i == 0 || cert.kind == CurveKind::core);
      ordered_json values{{"i", family_i},
                          {"kind", cert.kind == CurveKind::core ? "core" : "pre-core"},
                          {"curve", to_json(lt.tri, cert.curve)},
                          {"witness_disc", disc_json(cert.witness_disc)},
                          {"algebraic_pairing", cert.algebraic_pairing},
                          {"one_skeleton_hits", cert.one_skeleton_hits},
                          {"hit_edge_label", cert.hit_edge_label ? slope_json(*cert.hit_edge_label) : ordered_json()},
                          {"max_arcs_per_face", cert.max_arcs_per_face}};
      if (cert.max_arcs_per_tet) {
        values["max_arcs_per_tet"] = *cert.max_arcs_per_tet;
        values["pushoff_endpoints_in_face_interiors"] = cert.pushoff_endpoints_ok;
      }
      if (!out_path.empty()) write_file(out_path, to_json(lt.tri, cert.curve).dump() + "\n");
      rep.add("core_curve", verdict(ok), values, "Theorem 6.1(3): a curve meeting the 1-skeleton once is pre-core, and core when interior");
      const bool arcs_ok = cert.max_arcs_per_face <= 10 &&
                           (!cert.pushoff || (cert.max_arcs_per_tet.value_or(0) <= 18 && cert.pushoff_endpoints_ok));
      rep.add("arc_bounds", verdict(arcs_ok), {{"max_arcs_per_face", cert.max_arcs_per_face}},
              "Theorem 1.1: at most 10 arcs per face; push-off at most 18 arcs per tetrahedron");
    } else if (*check) {
      const Triangulation tri = load_tri(rep, tri_path);
      const NormalVector v = load_disc(rep, disc_path);
      const PLCurve c = pl_curve_from_json(tri, nlohmann::json::parse(rep.read_input(in_path)));
      const bool embedded = is_embedded(tri, c);
      if (!embedded) {
        rep.add("curve_check", Verdict::fail, {{"embedded", false}});
      } else {
        const long pairing = algebraic_intersection(tri, c, v);
        const auto faces = arcs_per_face(tri, c);
        rep.add("curve_check", verdict(std::abs(pairing) == 1),
                {{"embedded", true},
                 {"algebraic_pairing", pairing},
                 {"one_skeleton_hits", one_skeleton_hits(tri, c)},
                 {"max_arcs_per_face", faces.max}});
      }
    } else if (*v611) {
      const auto r = verify_61_1(family_i, budget);
      rep.add("61-1", r.status,
              {{"i", family_i},
               {"max_pieces", max_pieces},
               {"discs_found", r.discs_found},
               {"min_piece_count", r.min_piece_count},
               {"x_next", r.x_next.str()},
               {"meets_bound", r.meets_bound},
               {"meets_phi", r.meets_phi},
               {"edge_bound", r.edge_bound},
               {"search_complete", r.search_complete},
               {"lower_bound_certified", r.lower_bound_certified}},
              "Theorem 6.1(1): every normal meridian disc of T_i has at least x_{i+2} pieces");
    } else if (*v612) {
      const auto r = verify_61_2(family_i, window);
      rep.add("61-2", r.status,
              {{"i", family_i},
               {"window", window},
               {"x_next", r.x_next.str()},
               {"y_next", r.y_next.str()},
               {"min_value", r.min_value.str()},
               {"argmin_n", r.argmin_n.str()},
               {"third_bound", r.third_bound},
               {"phi_bound", r.phi_bound},
               {"precore_min", r.precore_min.str()}},
              "Theorem 6.1(2): min |n x_{i+2} - y_{i+2}| >= x_{i+2}/3 and >= phi^{i-1}");
    }
  } catch (const CLI::Error&) {
    throw;
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.emit(std::cout, json, deterministic, seconds);
  return rep.exit_code();
}
