#include "cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cli/body_file.hpp"
#include "cli/report.hpp"
#include "spectral/fourier.hpp"
#include "spectral/obstruction.hpp"
#include "spectral/spectra.hpp"
#include "spectral/tiling.hpp"
#include "spectral/zeroset.hpp"

namespace spectral::cli {

namespace {

constexpr const char* lattice_help = "lattice as \"a b; c d\" (the columns (a, c) and (b, d) are the generators)";

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

double to_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError(what, "not a number: '" + s + "'");
  }
  if (trim(s.substr(used)).size() != 0) throw ParseError(what, "not a number: '" + s + "'");
  return v;
}

std::vector<Point2> read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("--points", "cannot open " + path);
  std::vector<Point2> pts;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || std::isalpha(static_cast<unsigned char>(line[0]))) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError(path + ":" + std::to_string(lineno), "expected x,y");
    pts.push_back({to_double(line.substr(0, comma), path + ":" + std::to_string(lineno)),
                   to_double(line.substr(comma + 1), path + ":" + std::to_string(lineno))});
  }
  return pts;
}

// Options shared by the candidate-set commands.
struct CandidateOptions {
  std::string lattice;
  std::string points;
  double window_radius = 0.0;

  void add(CLI::App* sub) {
    auto* l = sub->add_option("--lattice", lattice, lattice_help);
    auto* p = sub->add_option("--points", points, "CSV file of x,y points (must contain the origin)")
                  ->check(CLI::ExistingFile);
    l->excludes(p);
    sub->add_option("--window-radius", window_radius, "radius within which --points is complete")
        ->capture_default_str();
  }

  bool given() const { return !lattice.empty() || !points.empty(); }

  SpectrumCandidate candidate() const {
    if (!lattice.empty()) return SpectrumCandidate::from_lattice(parse_lattice(lattice));
    if (points.empty()) throw ParseError("--lattice", "one of --lattice or --points is required");
    if (!(window_radius > 0.0)) throw ParseError("--window-radius", "required (and positive) with --points");
    return SpectrumCandidate::from_points(read_points(points), window_radius);
  }

  /// Points complete within `radius` (lattices are enumerated to that radius).
  std::pair<std::vector<Point2>, double> points_within(const SpectrumCandidate& c, double radius) const {
    if (c.is_lattice()) return {enumerate(c, radius), radius};
    return {c.explicit_set().points, c.explicit_set().window_radius};
  }
};

std::vector<Point2> centers_from(const std::string& spec) {
  const auto v = parse_list(spec);
  if (v.size() != 2) throw ParseError("--centers", "expected half_width,spacing");
  return center_grid(v[0], v[1]);
}

double max_norm(std::span<const Point2> pts) {
  double m = 0.0;
  for (Point2 p : pts) m = std::max(m, norm(p));
  return m;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  CLI::App* sub = nullptr;
  std::string out_path;
  RunManifest manifest;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void record_parameters() {
    manifest.command = sub->get_name();
    for (const CLI::Option* opt : sub->get_options()) {
      if (opt->get_name() == "--help") continue;
      const auto& res = opt->results();
      if (!res.empty())
        manifest.parameters[opt->get_name()] = res.size() == 1 ? nlohmann::json(res[0]) : nlohmann::json(res);
      else if (!opt->get_default_str().empty())
        manifest.parameters[opt->get_name()] = opt->get_default_str();
    }
  }

  /// CSV to --out (with manifest) or to stdout.
  void emit(const Table& table) {
    if (out_path.empty()) {
      table.write(out);
      return;
    }
    manifest.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_outputs(out_path, table, manifest);
  }
};

ConvexBody load(const std::string& path) { return parse_body_file(path); }

ConvexPolygon load_polygon(const std::string& path) {
  const ConvexBody body = load(path);
  if (const auto* poly = body.as_polygon()) return *poly;
  if (auto poly = as_flat_polygon(body.graph())) return *poly;
  throw ParseError("--body", "this command needs a polygon");
}

}  // namespace

Point2 parse_point(const std::string& text) {
  const auto v = parse_list(text);
  if (v.size() != 2) throw ParseError("", "expected a point x,y, got '" + text + "'");
  return {v[0], v[1]};
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(trim(item), text));
  return out;
}

Lattice parse_lattice(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw ParseError("--lattice", "expected \"a b; c d\"");
  auto row = [&](const std::string& s) {
    std::istringstream is(s);
    std::vector<double> v;
    std::string tok;
    while (is >> tok) v.push_back(to_double(tok, "--lattice"));
    if (v.size() != 2) throw ParseError("--lattice", "each row needs two numbers");
    return v;
  };
  const auto r0 = row(text.substr(0, semi)), r1 = row(text.substr(semi + 1));
  try {
    return Lattice::from_matrix({r0[0], r0[1], r1[0], r1[1]});
  } catch (const Error& e) {
    throw ValidationError(e);
  }
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier transforms, zero sets, spectra and tilings of convex planar bodies", "spectral"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Context ctx{out, err};
  std::function<int()> run;
  auto command = [&](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--out", ctx.out_path, "CSV output; a manifest is written to <out>.manifest.json");
    return sub;
  };
  auto body_option = [](CLI::App* sub, std::string& target) {
    return sub->add_option("--body", target, "JSON body file")->required()->check(CLI::ExistingFile);
  };

  // ft
  struct {
    std::string body;
    std::vector<std::string> xi;
    std::string method = "auto";
    double tol = 1e-11;
  } ft_o;
  {
    auto* sub = command("ft", "Evaluate the Fourier transform of the indicator");
    body_option(sub, ft_o.body);
    sub->add_option("--xi", ft_o.xi, "frequency x,y (repeatable)")->required();
    sub->add_option("--method", ft_o.method, "auto, closed or quadrature")
        ->check(CLI::IsMember({"auto", "closed", "quadrature"}))
        ->capture_default_str();
    sub->add_option("--tol", ft_o.tol, "quadrature tolerance")->capture_default_str();
    sub->callback([&, sub] {
      ctx.sub = sub;
      run = [&] {
        const ConvexBody body = load(ft_o.body);
        EvalOptions opts;
        opts.quad_tol = ft_o.tol;
        ctx.manifest.tolerances["quad_tol"] = ft_o.tol;
        Table t{{"xi1", "xi2", "re", "im", "err", "method"}, {}};
        std::vector<Complex> values;
        for (const auto& s : ft_o.xi) {
          const Point2 xi = parse_point(s);
          FourierSample fs;
          if (ft_o.method == "quadrature") fs = ft_quadrature(body, xi, opts);
          else if (ft_o.method == "closed") {
            if (!body.is_polygon()) throw ParseError("--method", "closed form needs a polygon");
            fs = ft_polygon(body.polygon(), xi, opts);
          } else fs = ft(body, xi, opts);
          values.push_back(fs.value);
          t.rows.push_back({fmt(xi.x), fmt(xi.y), fmt(fs.value.real()), fmt(fs.value.imag()), fmt(fs.err),
                            fs.method == EvalMethod::closed_form ? "closed_form" : "quadrature"});
        }
        if (!ctx.out_path.empty()) {
          ctx.emit(t);
          return exit_ok;
        }
        const double floor = 1e-12 * body.area();
        for (const Complex& v : values) {
          char buf[64];
          if (std::abs(v.imag()) <= floor) std::snprintf(buf, sizeof buf, "%.6g", v.real());
          else std::snprintf(buf, sizeof buf, "%.6g %.6g", v.real(), v.imag());
          out << buf << '\n';
        }
        return exit_ok;
      };
    });
  }

  // zeros
  struct {
    std::string body, from, to;
    double step = 0.02, tol = 1e-9;
  } zo;
  {
    auto* sub = command("zeros", "Zeros of the transform along a segment (origin-symmetric bodies)");
    body_option(sub, zo.body);
    sub->add_option("--from", zo.from, "segment start x,y")->required();
    sub->add_option("--to", zo.to, "segment end x,y")->required();
    sub->add_option("--step", zo.step, "sampling step")->capture_default_str();
    sub->add_option("--tol", zo.tol, "zero tolerance relative to area")->capture_default_str();
    sub->callback([&, sub] {
      ctx.sub = sub;
      run = [&] {
        ZeroScanOptions opts;
        opts.step = zo.step;
        opts.tol = zo.tol;
        ctx.manifest.tolerances = {{"zero_tol_rel_area", zo.tol}, {"bracket_width", opts.bracket_width}};
        const auto zs = zeros_on_segment(load(zo.body), parse_point(zo.from), parse_point(zo.to), opts);
        Table t{{"xi1", "xi2", "residual"}, {}};
        for (const auto& z : zs) t.rows.push_back({fmt(z.xi.x), fmt(z.xi.y), fmt(z.residual)});
        ctx.emit(t);
        return exit_ok;
      };
    });
  }

  // slab-align
  struct {
    std::string body, r_list;
    double A = 3.0, step = 0.02;
  } so;
  {
    auto* sub = command("slab-align", "Distance of slab zeros to the zero set of the unit square");
    body_option(sub, so.body);
    sub->add_option("--A", so.A, "slab half-height")->capture_default_str();
    sub->add_option("--R-list", so.r_list, "comma-separated R values")->required();
    sub->add_option("--step", so.step, "line spacing and sampling step")->capture_default_str();
    sub->callback([&, sub] {
      ctx.sub = sub;
      run = [&] {
        ZeroScanOptions opts;
        opts.step = so.step;
        ctx.manifest.tolerances = {{"zero_tol_rel_area", opts.tol}, {"bracket_width", opts.bracket_width}};
        const auto rs = parse_list(so.r_list);
        const auto reps = slab_zero_alignment(load(so.body), so.A, rs, opts);
        Table t{{"R", "zeros", "max_dist", "mean_dist"}, {}};
        for (const auto& r : reps)
          t.rows.push_back({fmt(r.R), fmt(r.zeros.size()), fmt(r.max_dist), fmt(r.mean_dist)});
        ctx.emit(t);
        return exit_ok;
      };
    });
  }

  // ball-align
  struct {
    std::string body, window = "20,40";
    double A = 3.0, eps = 0.1, step = 0.02, line_spacing = 0.05;
    int r_points = 5;
  } bo;
  {
    auto* sub = command("ball-align", "Best-fit shifted vertical grid for zeros in balls B(R e1, A)");
    body_option(sub, bo.body);
    sub->add_option("--A", bo.A, "ball radius")->capture_default_str();
    sub->add_option("--eps", bo.eps, "accuracy parameter")->capture_default_str();
    sub->add_option("--window", bo.window, "R window lo,hi")->capture_default_str();
    sub->add_option("--step", bo.step, "sampling step along scan lines")->capture_default_str();
    sub->add_option("--line-spacing", bo.line_spacing, "spacing of scan lines")->capture_default_str();
    sub->add_option("--r-points", bo.r_points, "R values sampled in the window")->capture_default_str();
    sub->callback([&, sub] {
      ctx.sub = sub;
      run = [&] {
        const auto w = parse_list(bo.window);
        if (w.size() != 2) throw ParseError("--window", "expected lo,hi");
        BallScanOptions opts;
        opts.step = bo.step;
        opts.line_spacing = bo.line_spacing;
        opts.r_points = bo.r_points;
        ctx.manifest.tolerances = {{"zero_tol_rel_area", opts.zero.tol}, {"bracket_width", opts.zero.bracket_width}};
        const auto rep = ball_zero_alignment(load(bo.body), bo.A, bo.eps, {w[0], w[1]}, opts);
        Table t{{"R", "beta", "zeros", "max_dist", "mean_dist"}, {}};
        t.rows.push_back({fmt(rep.R), fmt(rep.target.beta), fmt(rep.zeros.size()), fmt(rep.max_dist), fmt(rep.mean_dist)});
        ctx.emit(t);
        return exit_ok;
      };
    });
  }

  // spectrum-check
  struct {
    std::string body;
    CandidateOptions cand;
    double radius = 10.0, tol = 1e-9, trunc = 50.0;
    int parseval_samples = 0;
    std::uint64_t seed = 0;
  } sc;
  {
    auto* sub = command("spectrum-check", "Orthogonality, separation and (optionally) Parseval for a candidate");
    body_option(sub, sc.body);
    sc.cand.add(sub);
    sub->add_option("--radius", sc.radius, "points with |lambda| <= radius are checked")->capture_default_str();
    sub->add_option("--tol", sc.tol, "|ft| <= tol * area counts as a zero")->capture_default_str();
    sub->add_option("--parseval-samples", sc.parseval_samples, "random x in the unit square; 0 skips")
        ->capture_default_str();
    sub->add_option("--trunc", sc.trunc, "Parseval truncation radius")->capture_default_str();
    sub->add_option("--seed", sc.seed, "RNG seed")->capture_default_str();
    sub->callback([&, sub] {
      ctx.sub = sub;
      run = [&] {
        const ConvexBody body = load(sc.body);
        const auto cand = sc.cand.candidate();
        ctx.manifest.tolerances = {{"orthogonality_tol_rel_area", sc.tol}};
        const auto orth = orthogonality_check(body, cand, sc.radius, sc.tol);
        const auto pts = enumerate(cand, sc.radius);
        const double sep = pts.size() >= 2 ? separation_check(pts) : 0.0;
        Table t{{"check", "value", "pass", "detail_x", "detail_y"}, {}};
        t.rows.push_back({"orthogonality", fmt(orth.worst_value), fmt(orth.pass), fmt(orth.worst.x), fmt(orth.worst.y)});
        t.rows.push_back({"separation", fmt(sep), fmt(sep > 0.0), "", ""});
        bool pass = orth.pass && sep > 0.0;
        if (sc.parseval_samples > 0) {
          std::mt19937_64 rng(sc.seed);
          std::uniform_real_distribution<double> u(0.0, 1.0);
          std::vector<Point2> xs;
          for (int i = 0; i < sc.parseval_samples; ++i) xs.push_back({u(rng), u(rng)});
          const auto pr = parseval_deficiency(body, cand, xs, sc.trunc);
          const bool ok = pr.max_dev <= pr.tail_bound;
          ctx.manifest.tolerances["parseval_tail_bound"] = pr.tail_bound;
          t.rows.push_back({"parseval", fmt(pr.max_dev), fmt(ok), fmt(pr.worst_x.x), fmt(pr.worst_x.y)});
          pass = pass && ok;
        }
        ctx.emit(t);
        return pass ? exit_ok : exit_property_failed;
      };
    });
  }

  // density
  struct {
    CandidateOptions cand;
    std::string r_list = "10,20,40", centers = "1,0.5";
  } dn;
  {
    auto* sub = command("density", "Landau densities D+/-(R) / (2R)^2");
    dn.cand.add(sub);
    sub->add_option("--R-list", dn.r_list, "comma-separated R values")->capture_default_str();
    sub->add_option("--centers", dn.centers, "center grid half_width,spacing")->capture_default_str();
    sub->callback([&, sub] {
      ctx.sub = sub;
      run = [&] {
        const auto cand = dn.cand.candidate();
        const auto centers = centers_from(dn.centers);
        const auto rs = parse_list(dn.r_list);
        Table t{{"R", "D_plus", "D_minus", "normalized_plus", "normalized_minus"}, {}};
        for (double R : rs) {
          const auto [pts, w] = dn.cand.points_within(cand, max_norm(centers) + 2.0 * R + 1.0);
          const auto rep = landau_density(pts, R, centers, w);
          t.rows.push_back({fmt(R), fmt(rep.D_plus), fmt(rep.D_minus), fmt(rep.normalized_plus), fmt(rep.normalized_minus)});
        }
        ctx.emit(t);
        return exit_ok;
      };
    });
  }

  // gap-check
  struct {
    std::string body;
    CandidateOptions cand;
    double C = 1.0;
    std::string centers = "5,0.25";
  } gc;
  {
    auto* sub = command("gap-check", "Every cube Q_R(mu) with R = C |boundary| / |body| meets the candidate");
    body_option(sub, gc.body);
    gc.cand.add(sub);
    sub->add_option("--C", gc.C, "constant in R = C perimeter / area")->capture_default_str();
    sub->add_option("--centers", gc.centers, "center grid half_width,spacing")->capture_default_str();
    sub->callback([&, sub] {
      ctx.sub = sub;
      run = [&] {
        const ConvexBody body = load(gc.body);
        const auto cand = gc.cand.candidate();
        const auto centers = centers_from(gc.centers);
        const double r_star = gc.C * measures(body).perimeter / body.area();
        const auto [pts, w] = gc.cand.points_within(cand, max_norm(centers) + 2.0 * r_star + 1.0);
        const auto rep = spectral_gap_check(pts, body, gc.C, centers, w);
        Table t{{"R_star", "largest_empty_R", "center_x", "center_y", "pass"}, {}};
        t.rows.push_back({fmt(rep.R_star), fmt(rep.largest_empty_R), fmt(rep.emptiest_center.x),
                          fmt(rep.emptiest_center.y), fmt(rep.pass)});
        ctx.emit(t);
        return rep.pass ? exit_ok : exit_property_failed;
      };
    });
  }

  // tile-check
  struct {
    std::string body, lattice;
    int samples = 10000;
    double margin = 1e-6;
    std::uint64_t seed = 0;
  } tc;
  {
    auto* sub = command("tile-check", "Sampled check that lattice translates tile the plane");
    body_option(sub, tc.body);
    sub->add_option("--lattice", tc.lattice, std::string(lattice_help) + "; default: the constructed tiling lattice");
    sub->add_option("--samples", tc.samples, "sample count")->capture_default_str();
    sub->add_option("--margin", tc.margin, "minimum distance of samples to tile boundaries")->capture_default_str();
    sub->add_option("--seed", tc.seed, "RNG seed")->capture_default_str();
    sub->callback([&, sub] {
      ctx.sub = sub;
      run = [&] {
        const ConvexPolygon poly = load_polygon(tc.body);
        const Lattice L = tc.lattice.empty() ? tiling_lattice(poly) : parse_lattice(tc.lattice);
        ctx.manifest.tolerances = {{"margin", tc.margin}, {"covolume_rel", 1e-6}};
        const auto check = verify_tiling(poly, L, tc.samples, tc.margin, tc.seed);
        Table t{{"g1x", "g1y", "g2x", "g2y", "samples", "bad", "pass"}, {}};
        t.rows.push_back({fmt(L.g1().x), fmt(L.g1().y), fmt(L.g2().x), fmt(L.g2().y), fmt(check.samples),
                          fmt(check.bad.size()), fmt(check.pass)});
        ctx.emit(t);
        return check.pass ? exit_ok : exit_property_failed;
      };
    });
  }

  // classify
  std::string cl_body;
  {
    auto* sub = command("classify", "Spectral / tiling verdict");
    body_option(sub, cl_body);
    sub->callback([&, sub] {
      ctx.sub = sub;
      run = [&] {
        const auto v = classify(load(cl_body));
        if (ctx.out_path.empty()) {
          out << (v.spectral ? "spectral " : "not_spectral ") << to_string(v.reason) << '\n';
        } else {
          Table t{{"tiles", "spectral", "reason", "g1x", "g1y", "g2x", "g2y"}, {}};
          std::vector<std::string> row{fmt(v.tiles), fmt(v.spectral), std::string(to_string(v.reason))};
          for (double c : {v.lattice ? v.lattice->g1().x : 0.0, v.lattice ? v.lattice->g1().y : 0.0,
                           v.lattice ? v.lattice->g2().x : 0.0, v.lattice ? v.lattice->g2().y : 0.0})
            row.push_back(v.lattice ? fmt(c) : "");
          t.rows.push_back(std::move(row));
          ctx.emit(t);
        }
        return v.spectral ? exit_ok : exit_property_failed;
      };
    });
  }

  // certify
  struct {
    std::string body;
    std::size_t apex = 0;
  } ce;
  {
    auto* sub = command("certify", "Non-spectrality certificate for a symmetric 2n-gon, n >= 4");
    body_option(sub, ce.body);
    sub->add_option("--apex", ce.apex, "starting vertex")->capture_default_str();
    sub->callback([&, sub] {
      ctx.sub = sub;
      run = [&] {
        const ConvexPolygon poly = load_polygon(ce.body);
        const auto cert = nonspectral_certificate(poly, ce.apex);
        const auto check = validate_certificate(poly, cert);
        Table t{{"kind", "i", "j", "k", "area", "is_min", "margin", "omega_area", "valid"}, {}};
        for (std::size_t n = 0; n < cert.triangles.size(); ++n) {
          const auto& tri = cert.triangles[n];
          t.rows.push_back({std::string(to_string(cert.kind)), fmt(tri.indices[0]), fmt(tri.indices[1]),
                            fmt(tri.indices[2]), fmt(tri.area), fmt(n == cert.min_index), fmt(cert.margin),
                            fmt(cert.omega_area), fmt(check.valid)});
        }
        ctx.emit(t);
        if (!check.valid) err << "certificate rejected: " << check.failure << '\n';
        return check.valid ? exit_ok : exit_property_failed;
      };
    });
  }

  // cap-scan
  struct {
    std::string body, height, deltas = "0.1,0.05,0.01", window = "0.1,10";
  } cs;
  {
    auto* sub = command("cap-scan", "Largest |f^(R)| for R in [c_lo/delta, c_hi/delta]");
    auto* b = sub->add_option("--body", cs.body, "graph body on [-1/2, 1/2]; scans f + g")->check(CLI::ExistingFile);
    auto* h = sub->add_option("--height", cs.height, "height descriptor JSON on [-1/2, 1/2]");
    b->excludes(h);
    sub->add_option("--delta", cs.deltas, "comma-separated delta values")->capture_default_str();
    sub->add_option("--window", cs.window, "c_lo,c_hi")->capture_default_str();
    sub->callback([&, sub] {
      ctx.sub = sub;
      run = [&] {
        const auto w = parse_list(cs.window);
        if (w.size() != 2) throw ParseError("--window", "expected c_lo,c_hi");
        Table t{{"delta", "R", "value", "ratio", "zero_cap"}, {}};
        for (double d : parse_list(cs.deltas)) {
          CapScanResult r;
          if (!cs.body.empty()) {
            const ConvexBody body = load(cs.body);
            if (!body.as_graph()) throw ParseError("--body", "cap-scan needs a graph body");
            r = cap_lower_bound_scan(body.graph(), d, {w[0], w[1]});
          } else if (!cs.height.empty()) {
            nlohmann::json doc;
            try {
              doc = nlohmann::json::parse(cs.height);
            } catch (const nlohmann::json::parse_error& e) {
              throw ParseError("--height", e.what());
            }
            r = cap_lower_bound_scan(parse_height(doc, -0.5, 0.5, "--height"), d, {w[0], w[1]});
          } else {
            throw ParseError("--height", "one of --body or --height is required");
          }
          t.rows.push_back({fmt(d), fmt(r.R), fmt(r.value), r.ratio ? fmt(*r.ratio) : "", fmt(r.zero_cap)});
        }
        ctx.emit(t);
        return exit_ok;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    ctx.record_parameters();
    return run();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return exit_input_error;
}

}  // namespace spectral::cli
