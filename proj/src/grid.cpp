#include "zetaverify/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

namespace zetaverify {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr char kMagic[8] = {'Z', 'V', 'W', 'G', 'R', 'D', '0', '1'};
constexpr double kBandWidth = 0.25;  // max log-a width sharing one shifted contour

Complex rot_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

struct AxisBands {
  // Bands are [start, end) index ranges into the axis nodes; band 0 is the
  // base-contour prefix (possibly empty). Contours are chosen per band pair
  // at the joint edge point, so a band only records its right edge.
  struct Band {
    int start, end;
    double a_edge;
  };
  std::vector<Band> bands;
};

AxisBands partition_axis(const Gl3TorusEvaluator& ev, int axis, const std::vector<double>& us,
                         double a_other_worst) {
  AxisBands out;
  const int n = static_cast<int>(us.size());
  int shift_start = n;
  for (int i = 0; i < n; ++i)
    if (ev.joint_base_penalty(axis, std::exp(us[i]), a_other_worst) > 8.0) {
      shift_start = i;
      break;
    }
  if (shift_start > 0)
    out.bands.push_back({0, shift_start, std::exp(us[shift_start - 1])});
  int i = shift_start;
  while (i < n) {
    int j = i;
    while (j + 1 < n && us[j + 1] - us[i] <= kBandWidth) ++j;
    // Contours are optimized at the band's log-center to halve the drift.
    out.bands.push_back({i, j + 1, std::exp(0.5 * (us[i] + us[j]))});
    i = j + 1;
  }
  return out;
}

void write_u64(std::ostream& os, uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}

uint64_t read_u64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
  return v;
}

void write_f64(std::ostream& os, double d) {
  uint64_t v;
  std::memcpy(&v, &d, 8);
  write_u64(os, v);
}

double read_f64(std::istream& is) {
  uint64_t v = read_u64(is);
  double d;
  std::memcpy(&d, &v, 8);
  return d;
}

void write_i64(std::ostream& os, int64_t v) { write_u64(os, static_cast<uint64_t>(v)); }
int64_t read_i64(std::istream& is) { return static_cast<int64_t>(read_u64(is)); }

std::vector<double> axis_nodes(int n, double lo, double hi) {
  std::vector<double> us(n);
  for (int i = 0; i < n; ++i) us[i] = lo + (hi - lo) * i / (n - 1);
  return us;
}

// Lagrange weights for point x over uniform-ish nodes xs.
void lagrange_weights(const std::vector<double>& xs, double x, std::vector<double>& w) {
  const size_t k = xs.size();
  w.assign(k, 1.0);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (j != i) w[i] *= (x - xs[j]) / (xs[i] - xs[j]);
}

}  // namespace

WhittakerGrid WhittakerGrid::build(long ell, long w, int epsilon, int j1, int j2, int j3,
                                   const GridGeometry& geom, const ContourSpec& base1,
                                   const ContourSpec& base2, int interp_order, int jobs) {
  if (geom.n1 < 2 || geom.n2 < 2 || geom.u1_min >= geom.u1_max || geom.u2_min >= geom.u2_max)
    throw std::invalid_argument("WhittakerGrid: empty or degenerate geometry");
  WhittakerGrid g;
  g.ell_ = ell;
  g.w_ = w;
  g.epsilon_ = epsilon;
  g.j1_ = j1;
  g.j2_ = j2;
  g.j3_ = j3;
  g.geom_ = geom;
  g.base1_ = base1;
  g.base2_ = base2;
  g.interp_order_ = interp_order;
  g.values_.assign(static_cast<size_t>(geom.n1) * geom.n2, Complex(0.0, 0.0));

  Gl3TorusEvaluator ev(ell, w, j1, j2, j3, base1, base2);
  std::vector<double> u1s = axis_nodes(geom.n1, geom.u1_min, geom.u1_max);
  std::vector<double> u2s = axis_nodes(geom.n2, geom.u2_min, geom.u2_max);
  AxisBands b1 = partition_axis(ev, 1, u1s, std::exp(geom.u2_max));
  AxisBands b2 = partition_axis(ev, 2, u2s, std::exp(geom.u1_max));

  struct Task {
    AxisBands::Band band1, band2;
  };
  std::vector<Task> tasks;
  for (const auto& x : b1.bands)
    for (const auto& y : b2.bands) tasks.push_back({x, y});

  auto run_task = [&](const Task& t) {
    std::vector<double> su1(u1s.begin() + t.band1.start, u1s.begin() + t.band1.end);
    std::vector<double> su2(u2s.begin() + t.band2.start, u2s.begin() + t.band2.end);
    Complex* out =
        g.values_.data() + static_cast<size_t>(t.band1.start) * geom.n2 + t.band2.start;
    auto [ax1, ax2] = ev.joint_contours(t.band1.a_edge, t.band2.a_edge);
    ev.compute_block(ax1, ax2, su1, su2, out, static_cast<size_t>(geom.n2));
  };

  const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  if (n_threads == 1) {
    for (const auto& t : tasks) run_task(t);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int i = 0; i < n_threads; ++i)
      pool.emplace_back([&] {
        for (size_t k = next.fetch_add(1); k < tasks.size(); k = next.fetch_add(1))
          run_task(tasks[k]);
      });
    for (auto& th : pool) th.join();
  }

  g.derive_log_tables();
  return g;
}

double WhittakerGrid::trend(double a1, double a2) const {
  // Smooth approximate-saddle abscissa field: Newton iteration (fixed count,
  // no branching, hence smooth in a1, a2) on the Stirling stationarity
  // system  ln(c_i + alpha) + (1/2) ln(c_i + j_i) - (1/2) ln(u) = ln(2 pi a_i),
  // u = c1 + c2 + j1 + j3, in the log parametrization c_i = lo_i + e^(t_i)
  // that keeps the field right of the pole chains. The envelope below uses
  // exact log-gammas at this field; only the field placement is approximate,
  // which a detrend tolerates.
  const double alpha = 0.5 * (ell_ - 1);
  const double la1 = std::log(a1), la2 = std::log(a2);
  const double lo1 = std::max(-alpha, static_cast<double>(-j1_)) + 0.25;
  const double lo2 = std::max(-alpha, static_cast<double>(-j3_)) + 0.25;
  double t1 = std::log(std::max(kTwoPi * a1, 0.5) - lo1 + 1.0);
  double t2 = std::log(std::max(kTwoPi * a2, 0.5) - lo2 + 1.0);
  const double r1 = std::log(kTwoPi * a1), r2 = std::log(kTwoPi * a2);
  for (int it = 0; it < 30; ++it) {
    double c1 = lo1 + std::exp(t1), c2 = lo2 + std::exp(t2);
    double u = c1 + c2 + j1_ + j3_;
    double f1 = std::log(c1 + alpha) + 0.5 * std::log(c1 + j1_) - 0.5 * std::log(u) - r1;
    double f2 = std::log(c2 + alpha) + 0.5 * std::log(c2 + j3_) - 0.5 * std::log(u) - r2;
    double d11 = (1.0 / (c1 + alpha) + 0.5 / (c1 + j1_) - 0.5 / u) * std::exp(t1);
    double d22 = (1.0 / (c2 + alpha) + 0.5 / (c2 + j3_) - 0.5 / u) * std::exp(t2);
    double d12 = -0.5 / u * std::exp(t2);
    double d21 = -0.5 / u * std::exp(t1);
    double det = d11 * d22 - d12 * d21;
    t1 -= (f1 * d22 - f2 * d12) / det;
    t2 -= (f2 * d11 - f1 * d21) / det;
  }
  const double c1 = lo1 + std::exp(t1), c2 = lo2 + std::exp(t2);
  double f = log_gamma_C(Complex(c1 + alpha, 0)).real() +
             log_gamma_R(Complex(c1 + j1_, 0)).real() +
             log_gamma_C(Complex(c2 + alpha, 0)).real() +
             log_gamma_R(Complex(c2 + j3_, 0)).real() -
             log_gamma_R(Complex(c1 + c2 + j1_ + j3_, 0)).real() + (1.0 - c1) * la1 +
             (1.0 - c2) * la2;
  // Central character of the stored values, linear in log a.
  return f + 0.5 * static_cast<double>(w_) * (la1 + 2.0 * la2);
}

void WhittakerGrid::derive_log_tables() {
  const Complex rot = rot_pow(-(j1_ - j3_));
  logmag_.resize(values_.size());
  sign_.resize(values_.size());
  for (int i = 0; i < geom_.n1; ++i) {
    double u1 = geom_.u1_min + (geom_.u1_max - geom_.u1_min) * i / (geom_.n1 - 1);
    for (int j = 0; j < geom_.n2; ++j) {
      double u2 = geom_.u2_min + (geom_.u2_max - geom_.u2_min) * j / (geom_.n2 - 1);
      size_t k = static_cast<size_t>(i) * geom_.n2 + j;
      Complex gv = values_[k] * rot;
      double mag = std::abs(gv);
      logmag_[k] = mag > 0 ? std::log(mag) - trend(std::exp(u1), std::exp(u2))
                           : -std::numeric_limits<double>::infinity();
      sign_[k] = gv.real() > 0 ? 1 : (gv.real() < 0 ? -1 : 0);
    }
  }
}

Complex WhittakerGrid::interpolate(double a1, double a2) const {
  if (!(a1 > 0) || !(a2 > 0)) throw std::invalid_argument("interpolate: positive arguments");
  const double u1 = std::log(a1), u2 = std::log(a2);
  if (u1 < geom_.u1_min || u1 > geom_.u1_max || u2 < geom_.u2_min || u2 > geom_.u2_max)
    throw std::invalid_argument("interpolate: point outside the grid window");

  const int k = interp_order_ + 1;
  const double d1 = (geom_.u1_max - geom_.u1_min) / (geom_.n1 - 1);
  const double d2 = (geom_.u2_max - geom_.u2_min) / (geom_.n2 - 1);
  int i0 = std::clamp(static_cast<int>(std::floor((u1 - geom_.u1_min) / d1)) - interp_order_ / 2,
                      0, geom_.n1 - k);
  int j0 = std::clamp(static_cast<int>(std::floor((u2 - geom_.u2_min) / d2)) - interp_order_ / 2,
                      0, geom_.n2 - k);

  std::vector<double> xs1(k), xs2(k), w1, w2;
  for (int i = 0; i < k; ++i) xs1[i] = geom_.u1_min + (i0 + i) * d1;
  for (int j = 0; j < k; ++j) xs2[j] = geom_.u2_min + (j0 + j) * d2;
  lagrange_weights(xs1, u1, w1);
  lagrange_weights(xs2, u2, w2);

  bool log_ok = true;
  int8_t s0 = sign_[static_cast<size_t>(i0) * geom_.n2 + j0];
  if (s0 == 0) log_ok = false;
  for (int i = 0; i < k && log_ok; ++i)
    for (int j = 0; j < k; ++j) {
      size_t idx = static_cast<size_t>(i0 + i) * geom_.n2 + (j0 + j);
      if (sign_[idx] != s0 || !std::isfinite(logmag_[idx])) {
        log_ok = false;
        break;
      }
    }

  if (log_ok) {
    // Interpolate the detrended log magnitude (log tables already carry
    // log|G| minus the saddle envelope, a slowly varying residual).
    double h = 0.0;
    for (int i = 0; i < k; ++i) {
      double row = 0.0;
      for (int j = 0; j < k; ++j) row += w2[j] * logmag_[static_cast<size_t>(i0 + i) * geom_.n2 + (j0 + j)];
      h += w1[i] * row;
    }
    double mag = std::exp(h + trend(a1, a2));
    return rot_pow(j1_ - j3_) * (static_cast<double>(s0) * mag);
  }

  // Sign change or underflow inside the stencil: plain-value interpolation.
  Complex acc(0.0, 0.0);
  for (int i = 0; i < k; ++i) {
    Complex row(0.0, 0.0);
    for (int j = 0; j < k; ++j)
      row += w2[j] * values_[static_cast<size_t>(i0 + i) * geom_.n2 + (j0 + j)];
    acc += w1[i] * row;
  }
  return acc;
}

GridProbeReport WhittakerGrid::self_test(int probes, double tol) const {
  Gl3TorusEvaluator ev(ell_, w_, j1_, j2_, j3_, base1_, base2_);
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_real_distribution<double> du1(geom_.u1_min, geom_.u1_max);
  std::uniform_real_distribution<double> du2(geom_.u2_min, geom_.u2_max);
  GridProbeReport rep;
  rep.probes = probes;
  for (int p = 0; p < probes; ++p) {
    double a1 = std::exp(du1(rng)), a2 = std::exp(du2(rng));
    Complex direct = ev.evaluate(a1, a2);
    Complex interp = interpolate(a1, a2);
    double denom = std::abs(direct);
    double dev = denom > 0 ? std::abs(direct - interp) / denom
                           : (std::abs(interp) > 0 ? 1.0 : 0.0);
    rep.max_rel_dev = std::max(rep.max_rel_dev, dev);
  }
  rep.passed = rep.max_rel_dev <= tol;
  return rep;
}

void WhittakerGrid::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("WhittakerGrid: cannot write " + path);
  os.write(kMagic, 8);
  for (long v : {ell_, w_, static_cast<long>(epsilon_), static_cast<long>(j1_),
                 static_cast<long>(j2_), static_cast<long>(j3_)})
    write_i64(os, v);
  write_i64(os, geom_.n1);
  write_i64(os, geom_.n2);
  for (double v : {geom_.u1_min, geom_.u1_max, geom_.u2_min, geom_.u2_max}) write_f64(os, v);
  for (const ContourSpec* c : {&base1_, &base2_}) {
    write_f64(os, c->abscissa);
    write_f64(os, c->height);
    write_i64(os, c->nodes);
    write_i64(os, static_cast<int64_t>(c->rule));
    write_f64(os, c->pole_margin);
  }
  write_i64(os, interp_order_);
  for (const Complex& v : values_) {
    write_f64(os, v.real());
    write_f64(os, v.imag());
  }
}

WhittakerGrid WhittakerGrid::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("WhittakerGrid: cannot read " + path);
  char magic[8];
  is.read(magic, 8);
  if (std::memcmp(magic, kMagic, 8) != 0)
    throw std::runtime_error("WhittakerGrid: bad magic in " + path);
  WhittakerGrid g;
  g.ell_ = read_i64(is);
  g.w_ = read_i64(is);
  g.epsilon_ = static_cast<int>(read_i64(is));
  g.j1_ = static_cast<int>(read_i64(is));
  g.j2_ = static_cast<int>(read_i64(is));
  g.j3_ = static_cast<int>(read_i64(is));
  g.geom_.n1 = static_cast<int>(read_i64(is));
  g.geom_.n2 = static_cast<int>(read_i64(is));
  g.geom_.u1_min = read_f64(is);
  g.geom_.u1_max = read_f64(is);
  g.geom_.u2_min = read_f64(is);
  g.geom_.u2_max = read_f64(is);
  for (ContourSpec* c : {&g.base1_, &g.base2_}) {
    c->abscissa = read_f64(is);
    c->height = read_f64(is);
    c->nodes = static_cast<int>(read_i64(is));
    c->rule = static_cast<ContourSpec::Rule>(read_i64(is));
    c->pole_margin = read_f64(is);
  }
  g.interp_order_ = static_cast<int>(read_i64(is));
  g.values_.resize(static_cast<size_t>(g.geom_.n1) * g.geom_.n2);
  for (Complex& v : g.values_) {
    double re = read_f64(is), im = read_f64(is);
    v = Complex(re, im);
  }
  if (!is) throw std::runtime_error("WhittakerGrid: truncated file " + path);
  g.derive_log_tables();
  return g;
}

std::string WhittakerGrid::cache_name(long ell, long w, int epsilon, int j1, int j2, int j3,
                                      const GridGeometry& geom, const ContourSpec& b1,
                                      const ContourSpec& b2, int interp_order) {
  std::ostringstream os;
  os << "wgrid_l" << ell << "_w" << w << "_e" << (epsilon > 0 ? "p" : "m") << "_j" << j1 << "-"
     << j2 << "-" << j3 << "_g" << geom.n1 << "x" << geom.n2;
  os.precision(6);
  os << std::fixed << "_u" << geom.u1_min << "_" << geom.u1_max << "_" << geom.u2_min << "_"
     << geom.u2_max;
  for (const ContourSpec* c : {&b1, &b2})
    os << "_c" << c->abscissa << "_T" << c->height << "_N" << c->nodes << "_r"
       << static_cast<int>(c->rule);
  os << "_o" << interp_order << ".zvw";
  return os.str();
}

WhittakerGrid WhittakerGrid::load_or_build(const std::string& cache_dir, long ell, long w,
                                           int epsilon, int j1, int j2, int j3,
                                           const GridGeometry& geom, const ContourSpec& base1,
                                           const ContourSpec& base2, int interp_order, int jobs,
                                           bool probe, bool* was_cached) {
  namespace fs = std::filesystem;
  fs::path dir(cache_dir);
  fs::path file = dir / cache_name(ell, w, epsilon, j1, j2, j3, geom, base1, base2, interp_order);
  if (fs::exists(file)) {
    WhittakerGrid g = load(file.string());
    if (g.ell_ == ell && g.w_ == w && g.j1_ == j1 && g.j2_ == j2 && g.j3_ == j3 &&
        g.geom_.n1 == geom.n1 && g.geom_.n2 == geom.n2) {
      if (was_cached) *was_cached = true;
      return g;
    }
  }
  WhittakerGrid g = build(ell, w, epsilon, j1, j2, j3, geom, base1, base2, interp_order, jobs);
  if (probe) {
    GridProbeReport rep = g.self_test();
    if (!rep.passed)
      throw std::runtime_error("WhittakerGrid: probe self-test failed (max rel dev " +
                               std::to_string(rep.max_rel_dev) + ")");
  }
  if (!cache_dir.empty()) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!ec) g.save(file.string());
  }
  if (was_cached) *was_cached = false;
  return g;
}

}  // namespace zetaverify
