#include "lterm/counting.hpp"

#include <cassert>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

namespace lterm {

namespace {

struct LeafRule {
  enum class Kind { None, Capped, All } kind;
  std::uint64_t max_succ;

  static LeafRule for_level(std::uint64_t m) {
    return m == 0 ? LeafRule{Kind::None, 0} : LeafRule{Kind::Capped, m - 1};
  }
  static LeafRule capped(std::uint64_t mx) { return {Kind::Capped, mx}; }
  static LeafRule all() { return {Kind::All, 0}; }
};

struct ExactPolicy {
  using Num = mpz_class;
  ExactPolicy(const SizeSpec&, double) {}
  void acc_leaf(Num& acc, std::uint64_t) const { acc += 1; }
  void acc_abs(Num& acc, const Num& up) const { acc += up; }
  void acc_app(Num& acc, const Num& conv) const { acc += conv; }
  static void acc_mul(Num& acc, const Num& x, const Num& y) {
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  }
};

struct ScaledPolicy {
  using Num = double;
  ScaledPolicy(const SizeSpec& s, double x)
      : wa(std::pow(x, s.zero_weight())), wb(std::pow(x, s.succ_weight())),
        wc(std::pow(x, s.abs_weight())), wd(std::pow(x, s.app_weight())) {}
  void acc_leaf(Num& acc, std::uint64_t j) const {
    acc += wa * std::pow(wb, static_cast<double>(j));
  }
  void acc_abs(Num& acc, const Num& up) const { acc += wc * up; }
  void acc_app(Num& acc, const Num& conv) const { acc += wd * conv; }
  static void acc_mul(Num& acc, const Num& x, const Num& y) { acc += x * y; }
  double wa, wb, wc, wd;
};

template <class Policy>
class Engine {
public:
  using Num = typename Policy::Num;
  using Row = std::vector<Num>;

  Engine(SizeSpec spec, double point)
      : spec_(spec), pol_(spec, point), a_(spec.zero_weight()), b_(spec.succ_weight()),
        c_(spec.abs_weight()), d_(spec.app_weight()) {}

  const SizeSpec& spec() const { return spec_; }

  // sum over i+j = s of l[i]*r[j]. When the application weight is 0 the end
  // indices refer to entries that are identically zero (a size-0 subterm
  // cannot exist then) and may not be computed yet, so they are skipped.
  void conv_into(Num& acc, const Row& l, const Row& r, std::uint64_t s) const {
    const std::uint64_t lo = d_ == 0 ? 1 : 0;
    if (s < 2 * lo) return;
    for (std::uint64_t i = lo; i <= s - lo; ++i) Policy::acc_mul(acc, l[i], r[s - i]);
  }

  bool leaf_at(std::uint64_t n, const LeafRule& rule, std::uint64_t& j_out) const {
    if (rule.kind == LeafRule::Kind::None) return false;
    if (n < a_ || (n - a_) % b_ != 0) return false;
    const std::uint64_t j = (n - a_) / b_;
    if (rule.kind == LeafRule::Kind::Capped && j > rule.max_succ) return false;
    j_out = j;
    return true;
  }

  // row[n] = [leaf of size n allowed by rule] + abs*up(n-c) + app*(row*row)(n-d)
  // `up` must be valid for all sizes <= nmax - c; self_up uses the row itself.
  template <class UpFn>
  Row quadratic_row(std::uint64_t nmax, const LeafRule& rule, UpFn&& up, bool self_up,
                    const Row* prefix_from = nullptr, std::uint64_t prefix_len = 0) const {
    Row row(nmax + 1);
    for (std::uint64_t i = 0; i < prefix_len && i <= nmax; ++i) row[i] = (*prefix_from)[i];
    for (std::uint64_t n = std::min<std::uint64_t>(prefix_len, nmax + 1); n <= nmax; ++n) {
      Num v{};
      std::uint64_t j;
      if (leaf_at(n, rule, j)) pol_.acc_leaf(v, j);
      if (n >= c_) pol_.acc_abs(v, self_up ? row[n - c_] : up(n - c_));
      if (n >= d_) {
        Num cv{};
        conv_into(cv, row, row, n - d_);
        pol_.acc_app(v, cv);
      }
      row[n] = std::move(v);
    }
    return row;
  }

  // Normal forms at one level: nf = leaf | abs . nf(level+1) | app(neutral, nf),
  // neutral = leaf | app(neutral, nf). Returns {nf_row, neutral_row}.
  template <class UpFn>
  std::pair<Row, Row> normal_form_rows(std::uint64_t nmax, const LeafRule& rule, UpFn&& up_nf,
                                       bool self_up, const Row* nf_prefix = nullptr,
                                       const Row* neutral_prefix = nullptr,
                                       std::uint64_t prefix_len = 0) const {
    Row nf(nmax + 1), neutral(nmax + 1);
    for (std::uint64_t i = 0; i < prefix_len && i <= nmax; ++i) {
      nf[i] = (*nf_prefix)[i];
      neutral[i] = (*neutral_prefix)[i];
    }
    for (std::uint64_t n = std::min<std::uint64_t>(prefix_len, nmax + 1); n <= nmax; ++n) {
      Num head{};
      std::uint64_t j;
      if (leaf_at(n, rule, j)) pol_.acc_leaf(head, j);
      if (n >= d_) {
        Num cv{};
        conv_into(cv, neutral, nf, n - d_);
        pol_.acc_app(head, cv);
      }
      neutral[n] = head; // leaf or application with a non-abstraction head
      if (n >= c_) pol_.acc_abs(head, self_up ? nf[n - c_] : up_nf(n - c_));
      nf[n] = std::move(head);
    }
    return {std::move(nf), std::move(neutral)};
  }

  std::uint64_t zero_w() const { return a_; }
  std::uint64_t succ_w() const { return b_; }
  std::uint64_t abs_w() const { return c_; }
  std::uint64_t app_w() const { return d_; }
  const Policy& policy() const { return pol_; }

private:
  SizeSpec spec_;
  Policy pol_;
  std::uint64_t a_, b_, c_, d_;
};

// Level-indexed table with stabilization: entries with zero + succ*m > n
// alias the unrestricted row; rows are built top-down and trimmed to the
// sizes reachable from queries at levels <= apex.
template <class Policy>
struct LeveledTable {
  using Num = typename Policy::Num;
  using Row = std::vector<Num>;

  std::uint64_t nmax = 0;
  std::uint64_t apex = 0;
  Row unrestricted;
  std::vector<Row> rows;

  std::uint64_t extent(std::uint64_t m, std::uint64_t abs_w) const {
    const std::uint64_t past = m > apex ? (m - apex) * abs_w : 0;
    return past >= nmax ? 0 : nmax - past;
  }

  const Num& at(const SizeSpec& spec, std::uint64_t m, std::uint64_t n) const {
    if (spec.zero_weight() + static_cast<std::uint64_t>(spec.succ_weight()) * m > n)
      return unrestricted[n];
    assert(m < rows.size() && n < rows[m].size());
    return rows[m][n];
  }
};

template <class Policy>
LeveledTable<Policy> build_m_open(const Engine<Policy>& eng, std::uint64_t nmax,
                                  std::uint64_t apex) {
  LeveledTable<Policy> t;
  t.nmax = nmax;
  t.apex = apex;
  t.unrestricted = eng.quadratic_row(nmax, LeafRule::all(), [](std::uint64_t) -> const typename Policy::Num& {
    throw std::logic_error("unreachable");
  }, /*self_up=*/true);

  const std::uint64_t a = eng.zero_w(), b = eng.succ_w(), c = eng.abs_w();
  std::uint64_t mtop = 0;
  while (a + b * mtop <= t.extent(mtop, c)) ++mtop;
  t.rows.resize(mtop);
  for (std::uint64_t m = mtop; m-- > 0;) {
    const std::uint64_t ext = t.extent(m, c);
    const std::uint64_t stab = std::min<std::uint64_t>(a + b * m, ext + 1);
    auto up = [&](std::uint64_t nn) -> const typename Policy::Num& {
      return t.at(eng.spec(), m + 1, nn);
    };
    t.rows[m] = eng.quadratic_row(ext, LeafRule::for_level(m), up, false,
                                  &t.unrestricted, stab);
  }
  return t;
}

template <class Policy>
struct NormalFormTable {
  using Row = typename Engine<Policy>::Row;
  std::uint64_t nmax = 0;
  std::uint64_t apex = 0;
  Row nf_unrestricted, neutral_unrestricted;
  std::vector<Row> nf_rows, neutral_rows;

  std::uint64_t extent(std::uint64_t m, std::uint64_t abs_w) const {
    const std::uint64_t past = m > apex ? (m - apex) * abs_w : 0;
    return past >= nmax ? 0 : nmax - past;
  }

  const typename Policy::Num& at(const SizeSpec& spec, std::uint64_t m, std::uint64_t n) const {
    if (spec.zero_weight() + static_cast<std::uint64_t>(spec.succ_weight()) * m > n)
      return nf_unrestricted[n];
    assert(m < nf_rows.size() && n < nf_rows[m].size());
    return nf_rows[m][n];
  }
};

template <class Policy>
NormalFormTable<Policy> build_normal_form(const Engine<Policy>& eng, std::uint64_t nmax,
                                          std::uint64_t apex) {
  NormalFormTable<Policy> t;
  t.nmax = nmax;
  t.apex = apex;
  auto no_up = [](std::uint64_t) -> const typename Policy::Num& {
    throw std::logic_error("unreachable");
  };
  auto [nfu, neu] = eng.normal_form_rows(nmax, LeafRule::all(), no_up, /*self_up=*/true);
  t.nf_unrestricted = std::move(nfu);
  t.neutral_unrestricted = std::move(neu);

  const std::uint64_t a = eng.zero_w(), b = eng.succ_w(), c = eng.abs_w();
  std::uint64_t mtop = 0;
  while (a + b * mtop <= t.extent(mtop, c)) ++mtop;
  t.nf_rows.resize(mtop);
  t.neutral_rows.resize(mtop);
  for (std::uint64_t m = mtop; m-- > 0;) {
    const std::uint64_t ext = t.extent(m, c);
    const std::uint64_t stab = std::min<std::uint64_t>(a + b * m, ext + 1);
    auto up = [&](std::uint64_t nn) -> const typename Policy::Num& {
      return t.at(eng.spec(), m + 1, nn);
    };
    auto [nf, neutral] = eng.normal_form_rows(ext, LeafRule::for_level(m), up, false,
                                              &t.nf_unrestricted, &t.neutral_unrestricted, stab);
    t.nf_rows[m] = std::move(nf);
    t.neutral_rows[m] = std::move(neutral);
  }
  return t;
}

// Shared lazy-table state for one numeric policy.
template <class Policy>
struct FamilyTables {
  using Num = typename Policy::Num;
  using Row = std::vector<Num>;

  FamilyTables(SizeSpec spec, double point) : eng(spec, point) {}

  Engine<Policy> eng;
  std::uint64_t nmax = 0;

  std::optional<LeveledTable<Policy>> m_open;
  std::uint64_t m_open_apex = 0;
  std::optional<NormalFormTable<Policy>> nf;
  std::uint64_t nf_apex = 0;
  std::map<std::uint64_t, std::vector<Row>> bounded_h;   // h -> rows 0..h
  std::map<std::pair<std::uint64_t, std::uint64_t>, Row> q_abs; // (m,q) -> row
  std::map<std::uint64_t, std::vector<Row>> superclass;  // N -> rows 0..N

  void grow(std::uint64_t n, std::uint64_t hard_cap) {
    if (n > hard_cap)
      throw ResourceLimitError("size " + std::to_string(n) + " exceeds the configured cap " +
                               std::to_string(hard_cap));
    if (n <= nmax) return;
    nmax = std::min<std::uint64_t>(std::max<std::uint64_t>({n, 2 * nmax, 64}), hard_cap);
    m_open.reset();
    nf.reset();
    bounded_h.clear();
    q_abs.clear();
    superclass.clear();
  }

  const Num& m_open_at(std::uint64_t m, std::uint64_t n) {
    if (!m_open || m_open_apex < m) {
      m_open_apex = std::max<std::uint64_t>(m_open_apex, std::max<std::uint64_t>(m, 4));
      m_open = build_m_open(eng, nmax, m_open_apex);
    }
    return m_open->at(eng.spec(), m, n);
  }

  const Num& unrestricted_at(std::uint64_t n) {
    if (!m_open) m_open_at(0, n);
    return m_open->unrestricted[n];
  }

  const Num& nf_at(std::uint64_t m, std::uint64_t n) {
    if (!nf || nf_apex < m) {
      nf_apex = std::max<std::uint64_t>(nf_apex, std::max<std::uint64_t>(m, 4));
      nf = build_normal_form(eng, nmax, nf_apex);
    }
    return nf->at(eng.spec(), m, n);
  }

  const Num& bounded_h_at(std::uint64_t m, std::uint64_t h, std::uint64_t n) {
    auto it = bounded_h.find(h);
    if (it == bounded_h.end()) {
      std::vector<Row> rows(h + 1);
      auto no_up = [](std::uint64_t) -> const Num& { throw std::logic_error("unreachable"); };
      rows[h] = eng.quadratic_row(nmax, LeafRule::capped(h - 1), no_up, /*self_up=*/true);
      for (std::uint64_t m2 = h; m2-- > 0;) {
        auto up = [&](std::uint64_t nn) -> const Num& { return rows[m2 + 1][nn]; };
        rows[m2] = eng.quadratic_row(nmax, LeafRule::for_level(m2), up, false);
      }
      it = bounded_h.emplace(h, std::move(rows)).first;
    }
    return it->second[std::min(m, h)][n];
  }

  const Row& q_abs_row(std::uint64_t m, std::uint64_t q) {
    auto key = std::make_pair(m, q);
    if (auto it = q_abs.find(key); it != q_abs.end()) return it->second;
    if (q == 0) {
      Row row;
      if (m == 0) {
        row.assign(nmax + 1, Num{}); // closed terms need at least one abstraction
      } else {
        // binary application trees over leaves with < m successors
        row.resize(nmax + 1);
        for (std::uint64_t n = 0; n <= nmax; ++n) {
          Num v{};
          std::uint64_t j;
          if (eng.leaf_at(n, LeafRule::for_level(m), j)) eng.policy().acc_leaf(v, j);
          if (n >= eng.app_w()) {
            Num cv{};
            eng.conv_into(cv, row, row, n - eng.app_w());
            eng.policy().acc_app(v, cv);
          }
          row[n] = std::move(v);
        }
      }
      return q_abs.emplace(key, std::move(row)).first->second;
    }
    const Row& up = q_abs_row(m + 1, q - 1);
    std::vector<const Row*> layers(q);
    for (std::uint64_t l = 0; l < q; ++l) layers[l] = &q_abs_row(m, l);
    auto it = q_abs.emplace(key, Row(nmax + 1)).first;
    Row& row = it->second;
    for (std::uint64_t n = 0; n <= nmax; ++n) {
      Num v{};
      if (n >= eng.abs_w()) eng.policy().acc_abs(v, up[n - eng.abs_w()]);
      if (n >= eng.app_w()) {
        const std::uint64_t s = n - eng.app_w();
        Num cv{};
        for (std::uint64_t l = 0; l <= q; ++l) {
          const Row& left = l < q ? *layers[l] : row;
          const Row& right = q - l < q ? *layers[q - l] : row;
          eng.conv_into(cv, left, right, s);
        }
        eng.policy().acc_app(v, cv);
      }
      row[n] = std::move(v);
    }
    return row;
  }

  const Num& superclass_at(std::uint64_t N, std::uint64_t m, std::uint64_t n) {
    auto it = superclass.find(N);
    if (it == superclass.end()) {
      if ((N + 1) * (nmax + 1) > 50'000'000ULL)
        throw ResourceLimitError("superclass table would exceed the memory cap");
      std::vector<Row> rows(N + 1);
      auto no_up = [](std::uint64_t) -> const Num& { throw std::logic_error("unreachable"); };
      rows[N] = eng.quadratic_row(nmax, LeafRule::all(), no_up, /*self_up=*/true);
      for (std::uint64_t m2 = N; m2-- > 0;) {
        auto up = [&](std::uint64_t nn) -> const Num& { return rows[m2 + 1][nn]; };
        rows[m2] = eng.quadratic_row(nmax, LeafRule::for_level(m2), up, false);
      }
      it = superclass.emplace(N, std::move(rows)).first;
    }
    return it->second[m][n];
  }
};

} // namespace

// ---------------------------------------------------------------------------
// ExactCounter

struct ExactCounter::Impl {
  Impl(SizeSpec spec, CountLimits limits) : limits(limits), tables(spec, 1.0) {}
  CountLimits limits;
  FamilyTables<ExactPolicy> tables;
};

ExactCounter::ExactCounter(SizeSpec spec, CountLimits limits)
    : impl_(std::make_unique<Impl>(spec, limits)) {}
ExactCounter::~ExactCounter() = default;
ExactCounter::ExactCounter(ExactCounter&&) noexcept = default;
ExactCounter& ExactCounter::operator=(ExactCounter&&) noexcept = default;

const SizeSpec& ExactCounter::spec() const noexcept { return impl_->tables.eng.spec(); }
const CountLimits& ExactCounter::limits() const noexcept { return impl_->limits; }

BigInt ExactCounter::unrestricted(std::uint64_t n) {
  impl_->tables.grow(n, impl_->limits.max_n);
  return impl_->tables.unrestricted_at(n);
}

BigInt ExactCounter::m_open(std::uint64_t m, std::uint64_t n) {
  impl_->tables.grow(n, impl_->limits.max_n);
  return impl_->tables.m_open_at(m, n);
}

BigInt ExactCounter::bounded_successors(std::uint64_t m, std::uint64_t h, std::uint64_t n) {
  if (h == 0)
    throw ValidationError(ValidationError::Kind::BadArgument,
                          "successor bound h must be >= 1");
  if (h > 100000)
    throw ResourceLimitError("successor bound h too large");
  impl_->tables.grow(n, impl_->limits.max_n);
  if ((h + 1) * (impl_->tables.nmax + 1) > 50'000'000ULL)
    throw ResourceLimitError("bounded-successor table would exceed the memory cap");
  return impl_->tables.bounded_h_at(m, h, n);
}

BigInt ExactCounter::q_abstractions(std::uint64_t m, std::uint64_t q, std::uint64_t n) {
  if (q > 4096) throw ResourceLimitError("abstraction count q too large");
  impl_->tables.grow(n, impl_->limits.max_n);
  return impl_->tables.q_abs_row(m, q)[n];
}

BigInt ExactCounter::at_most_q(std::uint64_t m, std::uint64_t q, std::uint64_t n) {
  if (q > 4096) throw ResourceLimitError("abstraction count q too large");
  impl_->tables.grow(n, impl_->limits.max_n);
  BigInt total = 0;
  for (std::uint64_t l = 0; l <= q; ++l) total += impl_->tables.q_abs_row(m, l)[n];
  return total;
}

BigInt ExactCounter::normal_form(std::uint64_t m, std::uint64_t n) {
  impl_->tables.grow(n, impl_->limits.max_n);
  return impl_->tables.nf_at(m, n);
}

BigInt ExactCounter::superclass(std::uint64_t N, std::uint64_t m, std::uint64_t n) {
  if (m > N)
    throw ValidationError(ValidationError::Kind::BadArgument,
                          "superclass level m must satisfy m <= N");
  impl_->tables.grow(n, impl_->limits.max_n);
  return impl_->tables.superclass_at(N, m, n);
}

BigInt ExactCounter::not_m_open(std::uint64_t m, std::uint64_t n) {
  impl_->tables.grow(n, impl_->limits.max_n);
  BigInt diff = impl_->tables.unrestricted_at(n);
  diff -= impl_->tables.m_open_at(m, n);
  return diff;
}

// ---------------------------------------------------------------------------
// ScaledCounter

struct ScaledCounter::Impl {
  Impl(SizeSpec spec, double point, std::uint64_t max_n)
      : point(point), max_n(max_n), tables(spec, point) {}
  double point;
  std::uint64_t max_n;
  FamilyTables<ScaledPolicy> tables;
};

ScaledCounter::ScaledCounter(SizeSpec spec, double point, std::uint64_t max_n) {
  if (!(point > 0.0) || point > 1.0)
    throw ValidationError(ValidationError::Kind::BadArgument,
                          "scale point must lie in (0, 1]");
  impl_ = std::make_unique<Impl>(spec, point, max_n);
}
ScaledCounter::~ScaledCounter() = default;
ScaledCounter::ScaledCounter(ScaledCounter&&) noexcept = default;
ScaledCounter& ScaledCounter::operator=(ScaledCounter&&) noexcept = default;

const SizeSpec& ScaledCounter::spec() const noexcept { return impl_->tables.eng.spec(); }
double ScaledCounter::point() const noexcept { return impl_->point; }

double ScaledCounter::unrestricted(std::uint64_t n) {
  impl_->tables.grow(n, impl_->max_n);
  return impl_->tables.unrestricted_at(n);
}

double ScaledCounter::m_open(std::uint64_t m, std::uint64_t n) {
  impl_->tables.grow(n, impl_->max_n);
  return impl_->tables.m_open_at(m, n);
}

double ScaledCounter::normal_form(std::uint64_t m, std::uint64_t n) {
  impl_->tables.grow(n, impl_->max_n);
  return impl_->tables.nf_at(m, n);
}

double ScaledCounter::q_abstractions(std::uint64_t m, std::uint64_t q, std::uint64_t n) {
  if (q > 4096) throw ResourceLimitError("abstraction count q too large");
  impl_->tables.grow(n, impl_->max_n);
  return impl_->tables.q_abs_row(m, q)[n];
}

// ---------------------------------------------------------------------------
// Enumeration

void enumerate_terms(const SizeSpec& spec, std::uint64_t m, std::uint64_t n,
                     const EnumFilter& filter,
                     const std::function<void(const Term&)>& sink, std::uint64_t cap) {
  if (n > cap)
    throw ResourceLimitError("enumeration size " + std::to_string(n) +
                             " exceeds the cap " + std::to_string(cap));
  const std::uint64_t a = spec.zero_weight(), b = spec.succ_weight(),
                      c = spec.abs_weight(), d = spec.app_weight();

  using Cb = std::function<void(const Term&)>;
  std::function<void(std::uint64_t, std::uint64_t, const Cb&)> gen =
      [&](std::uint64_t lvl, std::uint64_t sz, const Cb& cb) {
        if (sz >= a && (sz - a) % b == 0 && lvl >= 1) {
          const std::uint64_t j = (sz - a) / b;
          if (j <= lvl - 1) cb(Term::var(j));
        }
        if (sz >= c)
          gen(lvl + 1, sz - c, [&](const Term& body) { cb(Term::abs(body)); });
        if (sz >= d) {
          const std::uint64_t s = sz - d;
          const std::uint64_t lo = d == 0 ? 1 : 0;
          if (s >= 2 * lo) {
            for (std::uint64_t i = lo; i <= s - lo; ++i) {
              gen(lvl, i, [&](const Term& left) {
                gen(lvl, s - i, [&](const Term& right) { cb(Term::app(left, right)); });
              });
            }
          }
        }
      };

  gen(m, n, [&](const Term& t) {
    if (filter.normal_only && !is_normal_form(t)) return;
    if (filter.exact_abstractions &&
        term_metrics(t).abstractions != *filter.exact_abstractions)
      return;
    sink(t);
  });
}

std::vector<Term> enumerate_terms(const SizeSpec& spec, std::uint64_t m, std::uint64_t n,
                                  const EnumFilter& filter, std::uint64_t cap) {
  std::vector<Term> out;
  enumerate_terms(spec, m, n, filter, [&](const Term& t) { out.push_back(t); }, cap);
  return out;
}

// ---------------------------------------------------------------------------
// Cache file I/O

namespace {
std::string cache_header(const SizeSpec& spec, std::string_view family,
                         std::string_view params) {
  std::string h = "spec=" + spec.to_string() + " family=" + std::string(family) +
                  " params=" + std::string(params.empty() ? "-" : params) + " version=1";
  return h;
}
} // namespace

void write_count_cache(std::ostream& out, const SizeSpec& spec, std::string_view family,
                       std::string_view params, std::span<const CountCacheEntry> entries) {
  out << cache_header(spec, family, params) << "\n";
  for (const CountCacheEntry& e : entries)
    out << e.m << " " << e.n << " " << e.value.get_str() << "\n";
}

std::vector<CountCacheEntry> read_count_cache(std::istream& in, const SizeSpec& spec,
                                              std::string_view family,
                                              std::string_view params) {
  std::string header;
  if (!std::getline(in, header) || header != cache_header(spec, family, params))
    throw ValidationError(ValidationError::Kind::BadArgument,
                          "count cache header mismatch");
  std::vector<CountCacheEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    CountCacheEntry e;
    std::string digits;
    if (!(ls >> e.m >> e.n >> digits))
      throw ValidationError(ValidationError::Kind::BadArgument,
                            "malformed count cache line: " + line);
    try {
      e.value = BigInt(digits, 10);
    } catch (const std::invalid_argument&) {
      throw ValidationError(ValidationError::Kind::BadArgument,
                            "malformed count value: " + digits);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

} // namespace lterm
