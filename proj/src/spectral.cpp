#include "normgrowth/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "normgrowth/error.hpp"
#include "normgrowth/kernels.hpp"

namespace normgrowth {

namespace {

constexpr double kSlack = 1e-9;

std::string describe(const Subset& s) {
  std::ostringstream os;
  os << "|set|=" << s.size();
  if (s.size() <= 8) {
    os << " {";
    bool first = true;
    for (auto g : s.elements()) {
      os << (first ? "" : ",") << g;
      first = false;
    }
    os << "}";
  }
  return os.str();
}

std::string describe_classes(const NormalSubset& S) {
  std::ostringstream os;
  os << "classes=[";
  for (std::size_t i = 0; i < S.classes().size(); ++i) os << (i ? "," : "") << S.classes()[i];
  os << "]";
  return os.str();
}

double largest_on_complement(Eigen::MatrixXd K) {
  const auto n = K.rows();
  K.array() -= 1.0 / static_cast<double>(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K, Eigen::EigenvaluesOnly);
  double top = es.eigenvalues().maxCoeff();
  return std::sqrt(std::max(top, 0.0));
}

}  // namespace

CayleySpec make_cayley(const FiniteGroup& G, const ClassTable& CT, const Subset& S) {
  if (S.empty()) throw Error(ErrorCode::EmptySubset, "connection set is empty");
  CayleySpec spec{&G, S, std::nullopt};
  try {
    spec.normal_set = NormalSubset::from_subset(CT, S);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotNormal) throw;
  }
  return spec;
}

CayleySpec make_cayley(const FiniteGroup& G, const ClassTable&, const NormalSubset& S) {
  if (S.empty()) throw Error(ErrorCode::EmptySubset, "connection set is empty");
  return CayleySpec{&G, S.elements(), S};
}

std::vector<Complex> eigenvalues_normal(const CharacterTable& tab, const NormalSubset& S) {
  if (S.empty()) throw Error(ErrorCode::EmptySubset, "connection set is empty");
  const double size = static_cast<double>(S.size());
  std::vector<Complex> out;
  for (std::size_t r = 0; r < tab.rows(); ++r) {
    Complex acc = 0.0;
    for (auto c : S.classes())
      acc += static_cast<double>(tab.class_sizes[static_cast<std::size_t>(c)]) * tab.values[r][static_cast<std::size_t>(c)];
    out.push_back(acc / (tab.degrees[r] * size));
  }
  return out;
}

double lambda_normal(const CharacterTable& tab, const NormalSubset& S) {
  auto ev = eigenvalues_normal(tab, S);
  double best = 0.0;
  for (std::size_t r = 1; r < ev.size(); ++r) best = std::max(best, std::abs(ev[r]));
  return best;
}

double lambda_normal(const CharacterTable& tab, const CayleySpec& spec) {
  if (!spec.normal()) throw Error(ErrorCode::NotNormal, "connection set is not a union of classes");
  return lambda_normal(tab, *spec.normal_set);
}

DirectLambda lambda_direct(const CayleySpec& spec, const SpectralOptions& options) {
  const FiniteGroup& G = *spec.group;
  const std::size_t n = G.order();
  const auto S = spec.connection.elements();
  const double d = static_cast<double>(S.size());
  DirectLambda out;
  out.commutator_residual = std::numeric_limits<double>::quiet_NaN();

  if (n <= options.dense_cap) {
    const auto ni = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(ni, ni);
    for (std::size_t g = 0; g < n; ++g)
      for (auto s : S) M(static_cast<Eigen::Index>(g), G.mul(static_cast<ElementIndex>(g), s)) = 1.0 / d;
    Eigen::MatrixXd K = M * M.transpose();
    if (options.check_commutation && spec.normal()) {
      Eigen::MatrixXd KT = M.transpose() * M;
      out.commutator_residual = (K - KT).cwiseAbs().maxCoeff();
    }
    out.lambda = largest_on_complement(std::move(K));
    out.dense = true;
    return out;
  }

  // Power iteration with gathers: (xM)_z = (1/d) sum_s x[z s^-1], (yM^t)_x = (1/d) sum_s y[x s].
  std::vector<ElementIndex> fwd(S.size() * n), bwd(S.size() * n);
  for (std::size_t k = 0; k < S.size(); ++k) {
    ElementIndex sinv = G.inverse(S[k]);
    for (std::size_t x = 0; x < n; ++x) {
      fwd[k * n + x] = G.mul(static_cast<ElementIndex>(x), S[k]);
      bwd[k * n + x] = G.mul(static_cast<ElementIndex>(x), sinv);
    }
  }
  auto project = [&](std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(n);
    for (double& x : v) x -= mean;
  };
  auto norm = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  };

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> v(n), tmp(n), w(n);
  for (double& x : v) x = unif(rng);
  project(v);
  double nv = norm(v);
  for (double& x : v) x /= nv;

  out.dense = false;
  for (int it = 1; it <= options.max_iterations; ++it) {
    kernels::parallel::gather_sum(bwd, n, 1.0 / d, v, tmp);
    kernels::parallel::gather_sum(fwd, n, 1.0 / d, tmp, w);
    project(w);
    double rho = 0.0;
    for (std::size_t i = 0; i < n; ++i) rho += v[i] * w[i];
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res += (w[i] - rho * v[i]) * (w[i] - rho * v[i]);
    res = std::sqrt(res);
    double nw = norm(w);
    if (res <= options.tolerance || nw == 0.0) {
      out.lambda = std::sqrt(std::max(rho, 0.0));
      out.iterations = it;
      return out;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nw;
  }
  throw Error(ErrorCode::NoConvergence, "power iteration did not converge in " + std::to_string(options.max_iterations) +
                                            " iterations");
}

Subset neighborhood(const CayleySpec& spec, const Subset& B) {
  return kernels::parallel::product_set(*spec.group, B, spec.connection);
}

CheckResult check_vertex_expansion(const CayleySpec& spec, const Subset& B, const CharacterTable& tab) {
  const double lambda = lambda_normal(tab, spec);
  const double n = static_cast<double>(spec.group->order());
  const double b = static_cast<double>(B.size());
  const double alpha = b / n;
  const double bound = b / ((1.0 - alpha) * lambda * lambda + alpha);
  const double nb = static_cast<double>(neighborhood(spec, B).size());

  CheckResult r;
  r.check = "vertex_expansion";
  r.group = spec.group->label();
  r.n = spec.group->order();
  r.inputs = "S:" + describe_classes(*spec.normal_set) + " B:" + describe(B);
  r.lhs = nb;
  r.rhs = bound;
  r.margin = nb - bound;
  r.status = nb >= bound - kSlack ? Status::Pass : Status::Fail;
  return r;
}

CheckResult mixing_discrepancy(const CayleySpec& spec, const Subset& A, const Subset& B, const CharacterTable& tab) {
  const double lambda = lambda_normal(tab, spec);
  const FiniteGroup& G = *spec.group;
  const double n = static_cast<double>(G.order());
  const double d = static_cast<double>(spec.valency());
  const double alpha = static_cast<double>(A.size()) / n;
  const double beta = static_cast<double>(B.size()) / n;
  const auto arcs = static_cast<double>(kernels::parallel::arc_count(G, A, B, spec.connection));

  CheckResult r;
  r.check = "mixing_lemma";
  r.group = G.label();
  r.n = G.order();
  r.inputs = "S:" + describe_classes(*spec.normal_set) + " A:" + describe(A) + " B:" + describe(B);
  r.lhs = std::abs(arcs / (d * n) - alpha * beta);
  r.rhs = lambda * std::sqrt(alpha * (1.0 - alpha) * beta * (1.0 - beta));
  r.margin = r.rhs - r.lhs;
  r.status = r.lhs <= r.rhs + kSlack ? Status::Pass : Status::Fail;
  return r;
}

SpectralReport spectral_report(const CayleySpec& spec, const CharacterTable& tab, const SpectralOptions& options) {
  SpectralReport rep;
  rep.lambda_char = std::numeric_limits<double>::quiet_NaN();
  if (spec.normal()) {
    rep.eigenvalues = eigenvalues_normal(tab, *spec.normal_set);
    rep.lambda_char = lambda_normal(tab, spec);
  }
  auto direct = lambda_direct(spec, options);
  rep.lambda_direct = direct.lambda;
  rep.dense = direct.dense;
  rep.iterations = direct.iterations;
  rep.commutator_residual = direct.commutator_residual;
  return rep;
}

}  // namespace normgrowth
