#include "normgrowth/character_table.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <random>
#include <sstream>

#include "normgrowth/error.hpp"
#include "normgrowth/kernels.hpp"

namespace normgrowth {

ClassMultTensor class_mult_tensor(const FiniteGroup& G, const ClassTable& CT) {
  return {CT.count(), kernels::parallel::class_mult_tensor(G, CT)};
}

namespace {

constexpr double kOrderTol = 1e-6;

// -1, 0, 1 comparison of two rows: real parts first, then imaginary parts.
int compare_rows(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (std::abs(a[j].real() - b[j].real()) > kOrderTol) return a[j].real() < b[j].real() ? -1 : 1;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (std::abs(a[j].imag() - b[j].imag()) > kOrderTol) return a[j].imag() < b[j].imag() ? -1 : 1;
  return 0;
}

bool is_trivial_row(const std::vector<Complex>& row) {
  return std::all_of(row.begin(), row.end(), [](Complex v) { return std::abs(v - 1.0) < kOrderTol; });
}

}  // namespace

CharacterTable burnside_dixon_numeric(const ClassMultTensor& T, const std::vector<std::size_t>& sizes, std::size_t n,
                                      const DixonOptions& options) {
  const std::size_t k = T.k;
  const auto ki = static_cast<Eigen::Index>(k);
  std::vector<Eigen::MatrixXd> M(k, Eigen::MatrixXd(ki, ki));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < k; ++c)
        M[i](static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(c)) = static_cast<double>(T(i, j, c));

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);

  for (int attempt = 0; attempt < options.max_retries; ++attempt) {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(ki, ki);
    for (std::size_t i = 0; i < k; ++i) A += coeff(rng) * M[i];

    Eigen::EigenSolver<Eigen::MatrixXd> es(A, true);
    if (es.info() != Eigen::Success) continue;
    const auto& evals = es.eigenvalues();
    bool collided = false;
    for (Eigen::Index a = 0; a < ki && !collided; ++a)
      for (Eigen::Index b = a + 1; b < ki; ++b)
        if (std::abs(evals(a) - evals(b)) < options.collision_tol) {
          collided = true;
          break;
        }
    if (collided) continue;

    const Eigen::MatrixXcd V = es.eigenvectors();
    CharacterTable tab;
    tab.n = n;
    tab.class_sizes = sizes;
    bool degenerate = false;
    for (Eigen::Index col = 0; col < ki; ++col) {
      Complex w0 = V(0, col);
      if (std::abs(w0) < 1e-12) {
        degenerate = true;
        break;
      }
      std::vector<Complex> omega(k);
      double norm = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        omega[j] = V(static_cast<Eigen::Index>(j), col) / w0;
        norm += std::norm(omega[j]) / static_cast<double>(sizes[j]);
      }
      double raw_degree = std::sqrt(static_cast<double>(n) / norm);
      double rounded = std::round(raw_degree);
      double dev = std::abs(raw_degree - rounded);
      if (dev > options.integrality_tol || rounded < 1.0)
        throw Error(ErrorCode::NonIntegralDegree, "recovered degree " + std::to_string(raw_degree));
      tab.degree_deviation = std::max(tab.degree_deviation, dev);
      std::vector<Complex> row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = rounded * omega[j] / static_cast<double>(sizes[j]);
      row[0] = rounded;
      tab.values.push_back(std::move(row));
      tab.degrees.push_back(rounded);
    }
    if (degenerate) continue;

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      bool ta = is_trivial_row(tab.values[a]), tb = is_trivial_row(tab.values[b]);
      if (ta != tb) return ta;
      if (tab.degrees[a] != tab.degrees[b]) return tab.degrees[a] < tab.degrees[b];
      return compare_rows(tab.values[a], tab.values[b]) < 0;
    });
    CharacterTable sorted = tab;
    for (std::size_t r = 0; r < k; ++r) {
      sorted.values[r] = tab.values[order[r]];
      sorted.degrees[r] = tab.degrees[order[r]];
    }
    sorted.residual = verify_orthogonality(sorted);
    return sorted;
  }
  throw Error(ErrorCode::DegenerateSpectrum,
              "eigenvalues collided in all " + std::to_string(options.max_retries) + " attempts");
}

CharacterTable compute_character_table(const FiniteGroup& G, const ClassTable& CT, const DixonOptions& options) {
  auto tab = burnside_dixon_numeric(class_mult_tensor(G, CT), CT.sizes, G.order(), options);
  tab.group_label = G.label();
  tab.class_orders = CT.element_orders;
  return tab;
}

double verify_orthogonality(const CharacterTable& tab) {
  const std::size_t rows = tab.rows(), k = tab.classes();
  const double n = static_cast<double>(tab.n);
  double worst = 0.0;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t s = r; s < rows; ++s) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < k; ++j)
        acc += static_cast<double>(tab.class_sizes[j]) * tab.values[r][j] * std::conj(tab.values[s][j]);
      acc /= n;
      worst = std::max(worst, std::abs(acc - (r == s ? 1.0 : 0.0)));
    }
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = j; l < k; ++l) {
      Complex acc = 0.0;
      for (std::size_t r = 0; r < rows; ++r) acc += tab.values[r][j] * std::conj(tab.values[r][l]);
      double expected = j == l ? n / static_cast<double>(tab.class_sizes[j]) : 0.0;
      worst = std::max(worst, std::abs(acc - expected));
    }
  return worst;
}

int min_nontrivial_degree(const CharacterTable& tab) {
  if (tab.rows() < 2) throw Error(ErrorCode::OnlyTrivial, "group has only the trivial character");
  int m = tab.degree(1);
  for (std::size_t r = 2; r < tab.rows(); ++r) m = std::min(m, tab.degree(r));
  return m;
}

double character_ratio(const CharacterTable& tab, std::size_t j) {
  if (tab.rows() < 2) throw Error(ErrorCode::OnlyTrivial, "group has only the trivial character");
  if (j >= tab.classes()) throw Error(ErrorCode::ParseError, "class index out of range");
  double best = 0.0;
  for (std::size_t r = 1; r < tab.rows(); ++r) best = std::max(best, std::abs(tab.values[r][j]) / tab.degrees[r]);
  return std::min(best, 1.0);
}

RatioExtremes r_extremes(const CharacterTable& tab, const NormalSubset& S) {
  if (S.empty()) throw Error(ErrorCode::EmptySubset, "normal subset is empty");
  RatioExtremes e{2.0, -1.0};
  for (auto c : S.classes()) {
    double r = character_ratio(tab, static_cast<std::size_t>(c));
    e.min = std::min(e.min, r);
    e.max = std::max(e.max, r);
  }
  return e;
}

double max_nonidentity_ratio(const CharacterTable& tab) {
  double best = 0.0;
  for (std::size_t j = 1; j < tab.classes(); ++j) best = std::max(best, character_ratio(tab, j));
  return best;
}

std::string table_to_json(const CharacterTable& tab) {
  nlohmann::json doc;
  doc["group_label"] = tab.group_label;
  doc["order"] = tab.n;
  doc["class_sizes"] = tab.class_sizes;
  doc["class_orders"] = tab.class_orders;
  nlohmann::json chars = nlohmann::json::array();
  for (const auto& row : tab.values) {
    nlohmann::json r = nlohmann::json::array();
    for (auto v : row) r.push_back({v.real(), v.imag()});
    chars.push_back(std::move(r));
  }
  doc["characters"] = std::move(chars);
  return doc.dump(1);
}

CharacterTable table_from_json(const std::string& text, double max_residual) {
  CharacterTable tab;
  try {
    auto doc = nlohmann::json::parse(text);
    tab.group_label = doc.at("group_label").get<std::string>();
    tab.n = doc.at("order").get<std::size_t>();
    tab.class_sizes = doc.at("class_sizes").get<std::vector<std::size_t>>();
    tab.class_orders = doc.at("class_orders").get<std::vector<std::uint64_t>>();
    for (const auto& r : doc.at("characters")) {
      std::vector<Complex> row;
      for (const auto& v : r) {
        if (!v.is_array() || v.size() != 2) throw Error(ErrorCode::SchemaError, "character value must be [re, im]");
        row.emplace_back(v[0].get<double>(), v[1].get<double>());
      }
      tab.values.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaError, e.what());
  }

  const std::size_t k = tab.class_sizes.size();
  if (k == 0) throw Error(ErrorCode::SchemaError, "no classes");
  if (std::accumulate(tab.class_sizes.begin(), tab.class_sizes.end(), std::size_t{0}) != tab.n)
    throw Error(ErrorCode::SchemaError, "class sizes do not sum to the group order");
  if (tab.class_orders.size() != k) throw Error(ErrorCode::SchemaError, "class_orders length mismatch");
  if (tab.values.size() != k) throw Error(ErrorCode::SchemaError, "table is not square");
  for (const auto& row : tab.values) {
    if (row.size() != k) throw Error(ErrorCode::SchemaError, "row length mismatch");
    if (row[0].real() <= 0.0) throw Error(ErrorCode::SchemaError, "degree must be positive");
    tab.degrees.push_back(row[0].real());
  }
  tab.residual = verify_orthogonality(tab);
  if (!(tab.residual <= max_residual))
    throw Error(ErrorCode::OrthogonalityError, "orthogonality residual " + std::to_string(tab.residual));
  return tab;
}

void save_table(const CharacterTable& tab, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::SchemaError, "cannot write " + path.string());
  out << table_to_json(tab) << '\n';
}

CharacterTable load_table(const std::filesystem::path& path, double max_residual) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return table_from_json(ss.str(), max_residual);
}

}  // namespace normgrowth
