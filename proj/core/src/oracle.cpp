#include "permwold/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "permwold/errors.hpp"
#include "permwold/slocinski.hpp"

namespace permwold {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t size) {
  SparseMatrix m(size, size);
  for (std::size_t k = 0; k < size; ++k) m.columns_[k].push_back({k, 1});
  return m;
}

SparseMatrix SparseMatrix::diagonal(const std::vector<bool>& mask) {
  SparseMatrix m(mask.size(), mask.size());
  for (std::size_t k = 0; k < mask.size(); ++k)
    if (mask[k]) m.columns_[k].push_back({k, 1});
  return m;
}

void SparseMatrix::add(std::size_t row, std::size_t col, std::int64_t value) {
  if (row >= rows_ || col >= columns_.size())
    throw std::out_of_range("SparseMatrix::add");
  auto& c = columns_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const Entry& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    it->second += value;
    if (it->second == 0) c.erase(it);
  } else if (value != 0) {
    c.insert(it, {row, value});
  }
}

std::int64_t SparseMatrix::at(std::size_t row, std::size_t col) const {
  for (const auto& [r, v] : columns_.at(col))
    if (r == row) return v;
  return 0;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < cols(); ++c)
    for (const auto& [r, v] : columns_[c]) t.columns_[r].push_back({c, v});
  return t;  // columns come out sorted because c increases
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::map<std::size_t, std::int64_t> acc;
    for (const auto& [k, bv] : b.column(c))
      for (const auto& [r, av] : a.column(k)) acc[r] += av * bv;
    for (const auto& [r, v] : acc)
      if (v != 0) out.columns_[c].push_back({r, v});
  }
  return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("shape mismatch");
  SparseMatrix out = a;
  for (std::size_t c = 0; c < b.cols(); ++c)
    for (const auto& [r, v] : b.column(c)) out.add(r, c, v);
  return out;
}

std::string GeneratorMatrix::name() const {
  return (family == Family::S ? "S" : "T") + std::to_string(label);
}

std::vector<const GeneratorMatrix*> OracleModel::family(Family f) const {
  std::vector<const GeneratorMatrix*> out;
  for (const auto& g : generators)
    if (g.family == f) out.push_back(&g);
  return out;
}

std::size_t default_oracle_depth(std::size_t base_size) {
  return std::max<std::size_t>(4, base_size + 2);
}

namespace {

void check_budget(std::size_t base_size, std::size_t letters,
                  std::size_t depth, std::size_t budget) {
  // Upper bound on raw names: base * (1 + k + ... + k^depth).
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t d = 0; d <= depth; ++d) {
    total += layer * std::max<std::size_t>(base_size, 1);
    if (total > budget)
      throw ResourceError("oracle truncation exceeds basis budget of " +
                          std::to_string(budget));
    layer *= letters;
  }
}

template <class E, class Apply>
SparseMatrix generator_matrix(const std::vector<E>& basis,
                              const std::map<E, std::size_t>& index,
                              Apply&& apply_one) {
  SparseMatrix g(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto it = index.find(apply_one(basis[c]));
    if (it != index.end()) g.add(it->second, c, 1);
  }
  return g;
}

}  // namespace

OracleModel materialize(const Presentation& p, std::size_t depth,
                        std::size_t budget) {
  if (depth == 0) throw std::invalid_argument("oracle depth must be >= 1");
  check_budget(p.size(), p.m(), depth, budget);
  auto basis = enumerate(p, depth);
  std::map<Elem, std::size_t> index;
  OracleModel model;
  model.depth = depth;
  model.base_size = p.size();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    index.emplace(basis[k], k);
    model.names.push_back(to_string(p, basis[k]));
    model.reach.push_back(depth - basis[k].prefix.size());
    model.s_unitary.push_back(membership(p, basis[k]) == WoldPart::kUnitary);
  }
  for (Label i = 1; i <= p.m(); ++i)
    model.generators.push_back(
        {Family::S, i, generator_matrix(basis, index, [&](const Elem& x) {
           return apply(p, i, x);
         })});
  model.basis = std::move(basis);
  return model;
}

OracleModel materialize(const CommutingPair& cp, std::size_t depth,
                        std::size_t budget) {
  if (depth == 0) throw std::invalid_argument("oracle depth must be >= 1");
  check_budget(cp.size(), cp.m() + cp.n(), depth, budget);
  const auto& pp = cp.presentation();
  auto basis = enumerate(cp, depth);
  std::map<PairElem, std::size_t> index;
  OracleModel model;
  model.depth = depth;
  model.base_size = cp.size();
  model.theta = cp.theta();
  for (std::size_t k = 0; k < basis.size(); ++k) {
    index.emplace(basis[k], k);
    model.names.push_back(to_string(pp, basis[k]));
    model.reach.push_back(depth - basis[k].length());
    model.s_unitary.push_back(chain_is_infinite(cp, Family::S, basis[k]));
    model.t_unitary.push_back(chain_is_infinite(cp, Family::T, basis[k]));
  }
  for (const Family f : {Family::S, Family::T}) {
    const Label count = f == Family::S ? cp.m() : cp.n();
    for (Label l = 1; l <= count; ++l)
      model.generators.push_back(
          {f, l, generator_matrix(basis, index, [&](const PairElem& x) {
             return apply(cp, f, l, x);
           })});
  }
  model.basis = std::move(basis);
  return model;
}

namespace {

using Column = std::vector<SparseMatrix::Entry>;

Column unit(std::size_t x) { return {{x, 1}}; }

std::string show(const OracleModel& model, const Column& col) {
  if (col.empty()) return "0";
  std::string out;
  for (const auto& [r, v] : col) {
    if (!out.empty()) out += " + ";
    if (v != 1) out += std::to_string(v) + "*";
    out += model.names[r];
  }
  return out;
}

const GeneratorMatrix& generator(const OracleModel& model, Family f, Label l) {
  for (const auto& g : model.generators)
    if (g.family == f && g.label == l) return g;
  throw std::out_of_range("no such generator");
}

SparseMatrix sum_of_range_projections(
    const std::vector<const GeneratorMatrix*>& gens, std::size_t size) {
  SparseMatrix r(size, size);
  for (const auto* g : gens) r = r + g->matrix * g->matrix.transpose();
  return r;
}

}  // namespace

OracleReport verify_relations(const OracleModel& model) {
  OracleReport report;
  const std::size_t size = model.size();
  for (std::size_t x = 0; x < size; ++x)
    if (model.interior(x, 1)) ++report.checked_columns;

  for (const auto& g : model.generators) {
    for (std::size_t c = 0; c < size; ++c) {
      const auto& col = g.matrix.column(c);
      if (col.size() > 1 || (col.size() == 1 && col[0].second != 1))
        report.failures.push_back(g.name() + " column " + model.names[c] +
                                  " is not a 0/1 unit column");
    }
  }

  for (const Family f : {Family::S, Family::T}) {
    const auto gens = model.family(f);
    if (gens.empty()) continue;
    for (const auto* a : gens) {
      const SparseMatrix at = a->matrix.transpose();
      for (const auto* b : gens) {
        const SparseMatrix prod = at * b->matrix;
        for (std::size_t x = 0; x < size; ++x) {
          if (!model.interior(x, 1)) continue;
          const Column expected = a == b ? unit(x) : Column{};
          if (prod.column(x) != expected)
            report.failures.push_back(a->name() + "^T " + b->name() + " on " +
                                      model.names[x] + " gives " +
                                      show(model, prod.column(x)) +
                                      ", expected " + show(model, expected));
        }
      }
    }
    const SparseMatrix ranges = sum_of_range_projections(gens, size);
    const auto& unitary = f == Family::S ? model.s_unitary : model.t_unitary;
    const char* fam = f == Family::S ? "S" : "T";
    for (std::size_t x = 0; x < size; ++x) {
      if (!model.interior(x, 1)) continue;
      const Column& col = ranges.column(x);
      const bool full = col == unit(x);
      if (!full && !col.empty())
        report.failures.push_back(std::string("sum ") + fam + " " + fam +
                                  "^T on " + model.names[x] + " gives " +
                                  show(model, col) + ", not <= I");
      if (!unitary.empty() && unitary[x] && !full)
        report.failures.push_back(std::string("sum ") + fam + " " + fam +
                                  "^T is not I on unitary-part vector " +
                                  model.names[x]);
    }
  }

  if (!model.theta) return report;
  const Theta& theta = *model.theta;
  for (Label i = 1; i <= theta.m(); ++i) {
    for (Label j = 1; j <= theta.n(); ++j) {
      const auto [ip, jp] = theta(i, j);
      const auto& si = generator(model, Family::S, i).matrix;
      const auto& tj = generator(model, Family::T, j).matrix;
      const SparseMatrix lhs = si * tj;
      const SparseMatrix rhs = generator(model, Family::T, jp).matrix *
                               generator(model, Family::S, ip).matrix;
      for (std::size_t x = 0; x < size; ++x) {
        if (!model.interior(x, 2)) continue;
        if (lhs.column(x) != rhs.column(x))
          report.failures.push_back(
              "S" + std::to_string(i) + " T" + std::to_string(j) + " != T" +
              std::to_string(jp) + " S" + std::to_string(ip) + " on " +
              model.names[x] + ": " + show(model, lhs.column(x)) + " vs " +
              show(model, rhs.column(x)));
      }

      // T_j^T S_i = sum_{l : theta(i,l) = (k,j)} S_k T_l^T
      const SparseMatrix dc1 = tj.transpose() * si;
      SparseMatrix dc1_rhs(size, size);
      for (Label l = 1; l <= theta.n(); ++l) {
        const auto [k, jj] = theta(i, l);
        if (jj != j) continue;
        dc1_rhs = dc1_rhs + generator(model, Family::S, k).matrix *
                                generator(model, Family::T, l).matrix.transpose();
      }
      // S_i^T T_j = sum_{k : theta(i,k) = (l,j)} T_k S_l^T
      const SparseMatrix dc2 = si.transpose() * tj;
      SparseMatrix dc2_rhs(size, size);
      for (Label k = 1; k <= theta.n(); ++k) {
        const auto [l, jj] = theta(i, k);
        if (jj != j) continue;
        dc2_rhs = dc2_rhs + generator(model, Family::T, k).matrix *
                                generator(model, Family::S, l).matrix.transpose();
      }
      for (std::size_t x = 0; x < size; ++x) {
        if (!model.interior(x, 1)) continue;
        if (dc1.column(x) != dc1_rhs.column(x))
          report.doubly_commuting_failures.push_back(
              "T" + std::to_string(j) + "^T S" + std::to_string(i) + " on " +
              model.names[x] + ": " + show(model, dc1.column(x)) + " vs " +
              show(model, dc1_rhs.column(x)));
        if (dc2.column(x) != dc2_rhs.column(x))
          report.doubly_commuting_failures.push_back(
              "S" + std::to_string(i) + "^T T" + std::to_string(j) + " on " +
              model.names[x] + ": " + show(model, dc2.column(x)) + " vs " +
              show(model, dc2_rhs.column(x)));
      }
    }
  }
  return report;
}

std::string to_string(Claim claim) {
  switch (claim) {
    case Claim::kSInvariant: return "S-invariant";
    case Claim::kTInvariant: return "T-invariant";
    case Claim::kSReducing: return "S-reducing";
    case Claim::kTReducing: return "T-reducing";
    case Claim::kSUnitaryOn: return "S-unitary-on";
    case Claim::kSShiftOn: return "S-shift-on";
    case Claim::kTUnitaryOn: return "T-unitary-on";
    case Claim::kTShiftOn: return "T-shift-on";
  }
  return "?";
}

namespace {

void check_invariant(const OracleModel& model, const SparseMatrix& q,
                     const SparseMatrix& g, const std::string& gname,
                     OracleReport& report) {
  const SparseMatrix gq = g * q;
  const SparseMatrix qgq = q * gq;
  for (std::size_t x = 0; x < model.size(); ++x) {
    if (!model.interior(x, 1)) continue;
    if (qgq.column(x) != gq.column(x))
      report.failures.push_back(gname + " maps " + model.names[x] +
                                " out of the subspace");
  }
}

void check_commutes(const OracleModel& model, const SparseMatrix& q,
                    const SparseMatrix& g, const std::string& gname,
                    OracleReport& report) {
  const SparseMatrix qg = q * g;
  const SparseMatrix gq = g * q;
  for (std::size_t x = 0; x < model.size(); ++x) {
    if (!model.interior(x, 1)) continue;
    if (qg.column(x) != gq.column(x))
      report.failures.push_back(gname + " does not commute with the projection at " +
                                model.names[x]);
  }
}

void check_unitary_on(const OracleModel& model, const SparseMatrix& q,
                      Family f, OracleReport& report) {
  const SparseMatrix lhs =
      sum_of_range_projections(model.family(f), model.size()) * q;
  for (std::size_t x = 0; x < model.size(); ++x) {
    if (!model.interior(x, 1)) continue;
    if (lhs.column(x) != q.column(x))
      report.failures.push_back(std::string(f == Family::S ? "S" : "T") +
                                " is not row-unitary at " + model.names[x]);
  }
}

void check_shift_on(const OracleModel& model, const SparseMatrix& q,
                    Family f, OracleReport& report) {
  SparseMatrix adjoint_sum(model.size(), model.size());
  for (const auto* g : model.family(f))
    adjoint_sum = adjoint_sum + g->matrix.transpose();
  for (std::size_t x = 0; x < model.size(); ++x) {
    if (q.column(x).empty()) continue;
    // Iterate the adjoints from e_x: a shift drains every vector to 0.
    Column v = unit(x);
    std::vector<bool> seen(model.size(), false);
    bool drained = false;
    for (std::size_t step = 0; step <= model.size(); ++step) {
      if (v.empty()) {
        drained = true;
        break;
      }
      if (v.size() != 1 || seen[v[0].first]) break;
      seen[v[0].first] = true;
      v = adjoint_sum.column(v[0].first);
    }
    if (!drained)
      report.failures.push_back(std::string(f == Family::S ? "S" : "T") +
                                " has a non-shift orbit through " +
                                model.names[x]);
  }
}

}  // namespace

OracleReport verify_subspace(const OracleModel& model,
                             const std::vector<bool>& mask,
                             const std::vector<Claim>& claims) {
  if (mask.size() != model.size())
    throw std::invalid_argument("mask does not match the basis");
  OracleReport report;
  const SparseMatrix q = SparseMatrix::diagonal(mask);
  for (std::size_t x = 0; x < model.size(); ++x)
    if (model.interior(x, 1)) ++report.checked_columns;

  auto each = [&](Family f, auto&& fn) {
    for (const auto* g : model.family(f)) fn(*g);
  };
  for (const Claim claim : claims) {
    switch (claim) {
      case Claim::kSInvariant:
      case Claim::kTInvariant: {
        const Family f = claim == Claim::kSInvariant ? Family::S : Family::T;
        each(f, [&](const GeneratorMatrix& g) {
          check_invariant(model, q, g.matrix, g.name(), report);
        });
        break;
      }
      case Claim::kSReducing:
      case Claim::kTReducing: {
        const Family f = claim == Claim::kSReducing ? Family::S : Family::T;
        each(f, [&](const GeneratorMatrix& g) {
          check_commutes(model, q, g.matrix, g.name(), report);
          check_commutes(model, q, g.matrix.transpose(), g.name() + "^T",
                         report);
        });
        break;
      }
      case Claim::kSUnitaryOn: check_unitary_on(model, q, Family::S, report); break;
      case Claim::kTUnitaryOn: check_unitary_on(model, q, Family::T, report); break;
      case Claim::kSShiftOn: check_shift_on(model, q, Family::S, report); break;
      case Claim::kTShiftOn: check_shift_on(model, q, Family::T, report); break;
    }
  }
  return report;
}

OracleReport verify_subspace(const OracleModel& model, const SubspaceDesc& sub,
                             const std::vector<Claim>& claims) {
  const auto* basis = std::get_if<std::vector<Elem>>(&model.basis);
  if (!basis) throw std::invalid_argument("model is not a single-family model");
  std::vector<bool> mask;
  for (const auto& x : *basis) mask.push_back(sub.contains(x));
  return verify_subspace(model, mask, claims);
}

OracleReport verify_subspace(const OracleModel& model,
                             const Subspace<PairElem>& sub,
                             const std::vector<Claim>& claims) {
  const auto* basis = std::get_if<std::vector<PairElem>>(&model.basis);
  if (!basis) throw std::invalid_argument("model is not a pair model");
  std::vector<bool> mask;
  for (const auto& x : *basis) mask.push_back(sub.contains(x));
  return verify_subspace(model, mask, claims);
}

}  // namespace permwold
