#include "thom/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "thom/error.hpp"

namespace thom {
namespace {

constexpr std::size_t kMaxBasis = std::size_t{1} << 20;

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::string monomial_label(const std::vector<Generator>& gens, const std::vector<int>& exps) {
  std::string out;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (exps[g] == 0) continue;
    if (!out.empty()) out += '*';
    out += gens[g].name;
    if (exps[g] > 1) out += '^' + std::to_string(exps[g]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

void GradedAlgebra::add_term(Coefficients& acc, std::uint32_t index, const Scalar& c) const {
  auto [it, inserted] = acc.try_emplace(index, 0);
  it->second = reduce(field_, it->second + c);
  if (it->second == 0) acc.erase(it);
}

AlgebraPtr GradedAlgebra::truncated_poly(std::vector<Generator> gens, Field field, int dim) {
  std::set<std::string> names;
  int top = 0;
  std::size_t size = 1;
  for (const auto& g : gens) {
    if (!is_identifier(g.name)) throw InvariantError("generator name '" + g.name + "' is not an identifier");
    if (!names.insert(g.name).second) throw InvariantError("duplicate generator name '" + g.name + "'");
    if (g.degree < 1) throw InvariantError("generator '" + g.name + "' must have degree >= 1");
    if (g.nilpotency < 2) throw InvariantError("generator '" + g.name + "' must have nilpotency >= 2");
    if (field == Field::Rat && g.degree % 2 != 0)
      throw InvariantError("RAT algebras must be evenly graded (generator '" + g.name + "')");
    top += g.degree * (g.nilpotency - 1);
    size *= static_cast<std::size_t>(g.nilpotency);
    if (size > kMaxBasis) throw InvariantError("truncated polynomial basis too large");
  }
  if (dim != top) {
    throw InvariantError("no unique fundamental monomial of degree " + std::to_string(dim) +
                         " (top monomial has degree " + std::to_string(top) + ")");
  }

  auto alg = std::shared_ptr<GradedAlgebra>(new GradedAlgebra());
  alg->field_ = field;
  alg->top_degree_ = top;
  alg->gens_ = std::move(gens);
  alg->basis_.reserve(size);
  alg->exponents_.reserve(size);
  std::vector<int> exps(alg->gens_.size(), 0);
  for (std::size_t idx = 0; idx < size; ++idx) {
    int deg = 0;
    for (std::size_t g = 0; g < exps.size(); ++g) deg += exps[g] * alg->gens_[g].degree;
    alg->basis_.push_back({monomial_label(alg->gens_, exps), deg});
    alg->exponents_.push_back(exps);
    for (std::size_t g = 0; g < exps.size(); ++g) {
      if (++exps[g] < alg->gens_[g].nilpotency) break;
      exps[g] = 0;
    }
  }
  alg->fundamental_ = static_cast<std::uint32_t>(size - 1);
  std::uint32_t stride = 1;
  for (const auto& g : alg->gens_) {
    alg->named_.emplace_back(g.name, Coefficients{{stride, Scalar(1)}});
    stride *= static_cast<std::uint32_t>(g.nilpotency);
  }
  return alg;
}

AlgebraPtr GradedAlgebra::from_structure_constants(Field field, std::vector<BasisEntry> basis,
                                                   const std::vector<StructureConstant>& table,
                                                   std::uint32_t fundamental) {
  const std::size_t n = basis.size();
  if (n == 0 || basis[0].degree != 0 || basis[0].label != "1")
    throw InvariantError("basis must start with the unit '1' in degree 0");
  if (n > 4096) throw InvariantError("explicit basis too large");
  std::set<std::string> labels{"1"};
  int top = 0;
  for (std::size_t i = 1; i < n; ++i) {
    const auto& b = basis[i];
    if (b.degree < 1) throw InvariantError("degree 0 basis must be {1} (entry '" + b.label + "')");
    if (field == Field::Rat && b.degree % 2 != 0)
      throw InvariantError("RAT algebras must be evenly graded (basis '" + b.label + "')");
    if (!is_identifier(b.label)) throw InvariantError("basis label '" + b.label + "' is not an identifier");
    if (!labels.insert(b.label).second) throw InvariantError("duplicate basis label '" + b.label + "'");
    top = std::max(top, b.degree);
  }
  if (fundamental >= n || basis[fundamental].degree != top)
    throw InvariantError("fundamental class must be a top-degree basis element");

  auto alg = std::shared_ptr<GradedAlgebra>(new GradedAlgebra());
  alg->field_ = field;
  alg->top_degree_ = top;
  alg->basis_ = std::move(basis);
  alg->fundamental_ = fundamental;
  alg->table_.assign(n * n, {});
  for (std::uint32_t i = 0; i < n; ++i) {
    alg->table_[i] = {{i, Scalar(1)}};
    alg->table_[i * n] = {{i, Scalar(1)}};
  }
  std::vector<char> given(n * n, 0);
  for (const auto& sc : table) {
    if (sc.left == 0 || sc.right == 0 || sc.left >= n || sc.right >= n)
      throw InvariantError("structure constant indices must name positive-degree basis elements");
    const int deg = alg->basis_[sc.left].degree + alg->basis_[sc.right].degree;
    Coefficients prod;
    for (const auto& [idx, c] : sc.product) {
      if (idx >= n) throw InvariantError("structure constant refers to unknown basis element");
      alg->add_term(prod, idx, c);
    }
    for (const auto& [idx, c] : prod) {
      if (alg->basis_[idx].degree != deg)
        throw InvariantError("product " + alg->basis_[sc.left].label + "*" + alg->basis_[sc.right].label +
                             " does not respect the grading");
    }
    const std::size_t lr = sc.left * n + sc.right;
    const std::size_t rl = sc.right * n + sc.left;
    if (given[lr] && alg->table_[lr] != prod)
      throw InvariantError("conflicting structure constants for " + alg->basis_[sc.left].label + "*" +
                           alg->basis_[sc.right].label);
    alg->table_[lr] = prod;
    given[lr] = 1;
    if (!given[rl]) alg->table_[rl] = prod;
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (alg->table_[i * n + j] != alg->table_[j * n + i])
        throw InvariantError("multiplication is not commutative on " + alg->basis_[i].label + ", " +
                             alg->basis_[j].label);
  for (std::uint32_t i = 1; i < n; ++i)
    for (std::uint32_t j = 1; j < n; ++j)
      for (std::uint32_t l = 1; l < n; ++l) {
        if (alg->basis_[i].degree + alg->basis_[j].degree + alg->basis_[l].degree > top) continue;
        Coefficients left, right;
        for (const auto& [ij, c] : alg->table_[i * n + j]) alg->multiply_into(ij, l, c, left);
        for (const auto& [jl, c] : alg->table_[j * n + l]) alg->multiply_into(i, jl, c, right);
        if (left != right)
          throw InvariantError("multiplication is not associative on " + alg->basis_[i].label + ", " +
                               alg->basis_[j].label + ", " + alg->basis_[l].label);
      }
  for (std::uint32_t i = 1; i < n; ++i) alg->named_.emplace_back(alg->basis_[i].label, Coefficients{{i, Scalar(1)}});
  return alg;
}

AlgebraPtr GradedAlgebra::tensor(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->field_ != b->field_) throw InvariantError("tensor product of algebras over different fields");
  std::set<std::string> taken;
  for (const auto& [name, _] : a->named_) taken.insert(name);
  auto rename = [&](std::string name) {
    while (taken.count(name)) name += '\'';
    return name;
  };

  if (a->is_monomial() && b->is_monomial()) {
    std::vector<Generator> gens = a->gens_;
    for (auto g : b->gens_) {
      g.name = rename(g.name);
      taken.insert(g.name);
      gens.push_back(std::move(g));
    }
    return truncated_poly(std::move(gens), a->field_, a->top_degree_ + b->top_degree_);
  }

  const std::size_t na = a->size(), nb = b->size();
  if (na * nb > 4096) throw InvariantError("explicit tensor product too large");
  std::vector<std::pair<std::string, Coefficients>> b_named;
  std::map<std::string, std::string> renamed_to;
  for (const auto& [name, coeffs] : b->named_) {
    std::string renamed = rename(name);
    taken.insert(renamed);
    renamed_to[name] = renamed;
    b_named.emplace_back(renamed, coeffs);
  }
  // Labels are '*'-joined tokens "name" or "name^k"; rename the name parts.
  auto relabel = [&](const std::string& label) {
    if (label == "1") return label;
    std::string out;
    std::size_t start = 0;
    while (start <= label.size()) {
      std::size_t end = label.find('*', start);
      if (end == std::string::npos) end = label.size();
      std::string token = label.substr(start, end - start);
      const std::size_t caret = token.find('^');
      std::string name = token.substr(0, caret);
      if (auto it = renamed_to.find(name); it != renamed_to.end()) name = it->second;
      if (!out.empty()) out += '*';
      out += name + (caret == std::string::npos ? "" : token.substr(caret));
      start = end + 1;
    }
    return out;
  };
  std::vector<std::string> b_labels(nb);
  for (std::size_t j = 0; j < nb; ++j) b_labels[j] = relabel(b->basis_[j].label);

  auto alg = std::shared_ptr<GradedAlgebra>(new GradedAlgebra());
  alg->field_ = a->field_;
  alg->top_degree_ = a->top_degree_ + b->top_degree_;
  alg->basis_.resize(na * nb);
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t i = 0; i < na; ++i) {
      const auto& la = a->basis_[i].label;
      const auto& lb = b_labels[j];
      std::string label = la == "1" ? lb : (lb == "1" ? la : la + "*" + lb);
      alg->basis_[i + na * j] = {label, a->basis_[i].degree + b->basis_[j].degree};
    }
  alg->fundamental_ = static_cast<std::uint32_t>(a->fundamental_ + na * b->fundamental_);
  const std::size_t n = na * nb;
  alg->table_.assign(n * n, {});
  for (std::uint32_t p = 0; p < n; ++p)
    for (std::uint32_t q = 0; q < n; ++q) {
      Coefficients pa, pb;
      a->multiply_into(p % na, q % na, 1, pa);
      if (pa.empty()) continue;
      b->multiply_into(p / na, q / na, 1, pb);
      for (const auto& [ia, ca] : pa)
        for (const auto& [ib, cb] : pb)
          alg->add_term(alg->table_[p * n + q], static_cast<std::uint32_t>(ia + na * ib), ca * cb);
    }
  for (const auto& [name, coeffs] : a->named_) alg->named_.emplace_back(name, coeffs);
  for (const auto& [name, coeffs] : b_named) {
    Coefficients embedded;
    for (const auto& [idx, c] : coeffs) embedded.emplace(static_cast<std::uint32_t>(na * idx), c);
    alg->named_.emplace_back(name, std::move(embedded));
  }
  return alg;
}

std::vector<std::uint32_t> GradedAlgebra::basis_in_degree(int d) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].degree == d) out.push_back(i);
  return out;
}

void GradedAlgebra::multiply_into(std::uint32_t i, std::uint32_t j, const Scalar& c,
                                  Coefficients& acc) const {
  if (is_monomial()) {
    const auto& ei = exponents_[i];
    const auto& ej = exponents_[j];
    for (std::size_t g = 0; g < gens_.size(); ++g)
      if (ei[g] + ej[g] >= gens_[g].nilpotency) return;
    add_term(acc, i + j, c);
    return;
  }
  for (const auto& [idx, k] : table_[i * basis_.size() + j]) add_term(acc, idx, c * k);
}

// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(AlgebraPtr owner, Coefficients coeffs) : owner_(std::move(owner)) {
  for (auto& [idx, c] : coeffs) {
    if (idx >= owner_->size()) throw InvariantError("basis index out of range");
    owner_->add_term(coeffs_, idx, c);
  }
}

AlgebraElement AlgebraElement::one(const AlgebraPtr& owner) { return basis(owner, 0); }

AlgebraElement AlgebraElement::basis(const AlgebraPtr& owner, std::uint32_t index, const Scalar& c) {
  return AlgebraElement(owner, Coefficients{{index, c}});
}

AlgebraElement AlgebraElement::constant(const AlgebraPtr& owner, const Scalar& c) {
  return basis(owner, 0, c);
}

Scalar AlgebraElement::coefficient(std::uint32_t index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

AlgebraElement AlgebraElement::homogeneous_part(int d) const {
  AlgebraElement out(owner_);
  for (const auto& [idx, c] : coeffs_)
    if (owner_->degree(idx) == d) out.coeffs_.emplace(idx, c);
  return out;
}

bool AlgebraElement::is_homogeneous(int d) const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&](const auto& kv) { return owner_->degree(kv.first) == d; });
}

Scalar AlgebraElement::pair() const {
  if (!owner_) return 0;
  return coefficient(owner_->fundamental());
}

AlgebraElement AlgebraElement::pow(int exponent) const {
  if (exponent < 0) throw InvariantError("negative power of an algebra element");
  AlgebraElement result = one(owner_);
  AlgebraElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

void AlgebraElement::require_same_owner(const AlgebraElement& other, const char* op) const {
  if (owner_ != other.owner_)
    throw InvariantError(std::string(op) + ": elements belong to different algebras");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_owner(other, "add");
  for (const auto& [idx, c] : other.coeffs_) owner_->add_term(coeffs_, idx, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_owner(other, "sub");
  for (const auto& [idx, c] : other.coeffs_) owner_->add_term(coeffs_, idx, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& c) {
  if (!owner_) return *this;
  const Scalar k = reduce(owner_->field(), c);
  if (k == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [idx, v] : coeffs_) v = reduce(owner_->field(), v * k);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_same_owner(b, "mul");
  AlgebraElement out(a.owner_);
  const int top = a.owner_->top_degree();
  for (const auto& [i, ci] : a.coeffs_) {
    const int di = a.owner_->degree(i);
    for (const auto& [j, cj] : b.coeffs_) {
      if (di + a.owner_->degree(j) > top) continue;
      a.owner_->multiply_into(i, j, ci * cj, out.coeffs_);
    }
  }
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.owner_ == b.owner_ && a.coeffs_ == b.coeffs_;
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }
Scalar pair(const AlgebraElement& x) { return x.pair(); }

// ---------------------------------------------------------------------------

LinearMap::LinearMap(AlgebraPtr source, AlgebraPtr target, int degree_shift,
                     std::vector<Coefficients> columns, bool ring_map)
    : source_(std::move(source)), target_(std::move(target)), shift_(degree_shift), ring_map_(ring_map) {
  if (source_->field() != target_->field()) throw InvariantError("linear map between different fields");
  if (columns.size() != source_->size()) throw InvariantError("linear map needs one column per source basis element");
  columns_.reserve(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    AlgebraElement col(target_, std::move(columns[i]));
    if (!col.is_homogeneous(source_->degree(i) + shift_))
      throw InvariantError("linear map does not shift degrees by " + std::to_string(shift_) + " on '" +
                           source_->basis(i).label + "'");
    columns_.push_back(col.coeffs());
  }
  if (!ring_map_) return;
  if (shift_ != 0) throw InvariantError("ring maps must preserve degree");
  if (apply(AlgebraElement::one(source_)) != AlgebraElement::one(target_))
    throw InvariantError("ring map must send 1 to 1");
  for (std::uint32_t i = 1; i < source_->size(); ++i)
    for (std::uint32_t j = i; j < source_->size(); ++j) {
      if (source_->degree(i) + source_->degree(j) > source_->top_degree()) continue;
      auto bi = AlgebraElement::basis(source_, i);
      auto bj = AlgebraElement::basis(source_, j);
      if (apply(bi * bj) != apply(bi) * apply(bj))
        throw InvariantError("ring map is not multiplicative on " + source_->basis(i).label + ", " +
                             source_->basis(j).label);
    }
}

LinearMap LinearMap::identity(const AlgebraPtr& a) {
  std::vector<Coefficients> cols(a->size());
  for (std::uint32_t i = 0; i < a->size(); ++i) cols[i] = {{i, Scalar(1)}};
  return LinearMap(a, a, 0, std::move(cols), true);
}

LinearMap LinearMap::zero(const AlgebraPtr& source, const AlgebraPtr& target, int degree_shift) {
  return LinearMap(source, target, degree_shift, std::vector<Coefficients>(source->size()), false);
}

LinearMap LinearMap::left_inclusion(const AlgebraPtr& a, const AlgebraPtr& product) {
  if (product->size() % a->size() != 0) throw InvariantError("left_inclusion: not a tensor factor");
  std::vector<Coefficients> cols(a->size());
  for (std::uint32_t i = 0; i < a->size(); ++i) cols[i] = {{i, Scalar(1)}};
  return LinearMap(a, product, 0, std::move(cols), true);
}

LinearMap LinearMap::right_inclusion(const AlgebraPtr& b, const AlgebraPtr& product) {
  if (product->size() % b->size() != 0) throw InvariantError("right_inclusion: not a tensor factor");
  const auto stride = static_cast<std::uint32_t>(product->size() / b->size());
  std::vector<Coefficients> cols(b->size());
  for (std::uint32_t j = 0; j < b->size(); ++j) cols[j] = {{stride * j, Scalar(1)}};
  return LinearMap(b, product, 0, std::move(cols), true);
}

LinearMap LinearMap::left_restriction(const AlgebraPtr& product, const AlgebraPtr& a) {
  if (product->size() % a->size() != 0) throw InvariantError("left_restriction: not a tensor factor");
  const auto na = static_cast<std::uint32_t>(a->size());
  std::vector<Coefficients> cols(product->size());
  for (std::uint32_t p = 0; p < product->size(); ++p)
    if (p / na == 0) cols[p] = {{p % na, Scalar(1)}};
  return LinearMap(product, a, 0, std::move(cols), true);
}

AlgebraElement LinearMap::apply(const AlgebraElement& x) const {
  if (x.owner() != source_) throw InvariantError("linear map applied to an element of another algebra");
  Coefficients acc;
  for (const auto& [i, c] : x.coeffs())
    for (const auto& [j, k] : columns_[i]) acc[j] += c * k;
  return AlgebraElement(target_, std::move(acc));
}

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::vector<std::pair<int, std::uint32_t>> order;
  for (const auto& [idx, c] : x.coeffs()) order.emplace_back(x.owner()->degree(idx), idx);
  std::sort(order.begin(), order.end());
  std::string out;
  for (const auto& [deg, idx] : order) {
    Scalar c = x.coefficient(idx);
    const std::string& label = x.owner()->basis(idx).label;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (label == "1") {
      out += thom::to_string(c);
    } else {
      if (c != 1) out += thom::to_string(c) + "*";
      out += label;
    }
  }
  return out;
}

}  // namespace thom
