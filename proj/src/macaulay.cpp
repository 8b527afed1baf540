#include "tropgb/macaulay.hpp"

#include "tropgb/parser.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tropgb {

namespace {

std::vector<Monomial> collect_columns(const std::vector<const Polynomial*>& polys, const PolyRing& ring) {
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> cols;
  for (const Polynomial* p : polys) {
    for (const auto& t : p->terms()) {
      if (seen.insert(t.mon).second) cols.push_back(t.mon);
    }
  }
  const TropicalOrder& ord = ring.order();
  std::sort(cols.begin(), cols.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.compare_monomials(a, b) > 0; });
  return cols;
}

std::vector<MatrixEntry> encode(const Polynomial& f, const std::unordered_map<Monomial, std::uint32_t, MonomialHash>& index) {
  std::vector<MatrixEntry> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({index.at(t.mon), t.coef});
  std::sort(out.begin(), out.end(), [](const MatrixEntry& a, const MatrixEntry& b) { return a.col < b.col; });
  return out;
}

MacaulayMatrix assemble(std::vector<Signature> sigs, const std::vector<const Polynomial*>& polys, const PolyRing& ring) {
  MacaulayMatrix m;
  m.columns = collect_columns(polys, ring);
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  index.reserve(m.columns.size());
  for (std::uint32_t c = 0; c < m.columns.size(); ++c) index.emplace(m.columns[c], c);
  m.rows.reserve(polys.size());
  for (std::size_t r = 0; r < polys.size(); ++r) {
    MatrixRow row;
    row.sig = sigs[r];
    row.entries = encode(*polys[r], index);
    m.rows.push_back(std::move(row));
  }
  return m;
}

// row_r <- row_r - f * row_p, both sorted by column.
void axpy(std::vector<MatrixEntry>& target, const Coeff& f, const std::vector<MatrixEntry>& src, const CoeffField& field) {
  std::vector<MatrixEntry> out;
  out.reserve(target.size() + src.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < target.size() || j < src.size()) {
    if (j == src.size() || (i < target.size() && target[i].col < src[j].col)) {
      out.push_back(std::move(target[i++]));
    } else if (i == target.size() || src[j].col < target[i].col) {
      out.push_back({src[j].col, field.neg(field.mul(f, src[j].coef))});
      ++j;
    } else {
      Coeff v = field.sub_mul(target[i].coef, f, src[j].coef);
      if (!v.is_zero()) out.push_back({target[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  target = std::move(out);
}

const Coeff* find_entry(const std::vector<MatrixEntry>& entries, std::uint32_t col) {
  auto it = std::lower_bound(entries.begin(), entries.end(), col,
                             [](const MatrixEntry& e, std::uint32_t c) { return e.col < c; });
  if (it == entries.end() || it->col != col) return nullptr;
  return &it->coef;
}

void remove_entry(std::vector<MatrixEntry>& entries, std::uint32_t col) {
  auto it = std::lower_bound(entries.begin(), entries.end(), col,
                             [](const MatrixEntry& e, std::uint32_t c) { return e.col < c; });
  if (it != entries.end() && it->col == col) entries.erase(it);
}

}  // namespace

MacaulayMatrix build_matrix(std::vector<std::pair<Signature, Polynomial>> rows, const PolyRing& ring,
                            const SignatureOrderContext& ctx) {
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const auto& a, const auto& b) { return ctx.compare(a.first, b.first) < 0; });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i - 1].first == rows[i].first) throw std::invalid_argument("duplicate signature in Macaulay matrix");
  }
  std::vector<Signature> sigs;
  std::vector<const Polynomial*> polys;
  for (const auto& [s, p] : rows) {
    sigs.push_back(s);
    polys.push_back(&p);
  }
  return assemble(std::move(sigs), polys, ring);
}

MacaulayMatrix build_matrix_unsigned(const std::vector<Polynomial>& rows, const PolyRing& ring) {
  std::vector<Signature> sigs(rows.size());
  std::vector<const Polynomial*> polys;
  for (const auto& p : rows) polys.push_back(&p);
  return assemble(std::move(sigs), polys, ring);
}

Polynomial row_polynomial(const MacaulayMatrix& m, std::size_t r, const PolyRing& ring) {
  std::vector<Term> ts;
  ts.reserve(m.rows[r].entries.size());
  for (const auto& e : m.rows[r].entries) ts.push_back(ring.make_term(e.coef, m.columns[e.col]));
  return ring.make(std::move(ts));
}

Coeff matrix_entry(const MacaulayMatrix& m, std::size_t r, std::size_t c) {
  const Coeff* p = find_entry(m.rows[r].entries, static_cast<std::uint32_t>(c));
  return p ? *p : Coeff{};
}

std::int32_t greatest_term_column(const MatrixRow& row, const MacaulayMatrix& m, const PolyRing& ring) {
  std::int32_t best = -1;
  std::int64_t best_val = 0;
  for (const auto& e : row.entries) {
    const std::int64_t v = ring.field().valuation(e.coef);
    if (best < 0 || ring.order().compare_terms(v, m.columns[e.col], best_val, m.columns[best]) > 0) {
      best = static_cast<std::int32_t>(e.col);
      best_val = v;
    }
  }
  return best;
}

namespace {

// Exact-mode LUP over primitive integer rows: cross-multiplication instead of
// rational division, content removed once per row. Output rows are scalar
// multiples of the rational elimination, so pivots and spans agree.
MacaulayMatrix lup_integer(const MacaulayMatrix& m, const PolyRing& ring) {
  const ValuationContext& vctx = ring.valuation_context();
  MacaulayMatrix u;
  u.columns = m.columns;
  u.rows.reserve(m.nrows());
  const std::size_t ncols = m.ncols();
  std::vector<std::int32_t> pivot_row(ncols, -1);
  std::vector<std::vector<std::pair<std::uint32_t, mpz_class>>> irows;
  std::vector<mpz_class> pivot_coef;
  irows.reserve(m.nrows());
  pivot_coef.reserve(m.nrows());
  std::vector<mpz_class> scratch(ncols);
  std::vector<char> touched_flag(ncols, 0);
  std::vector<std::uint32_t> touched;
  std::vector<char> queued(m.nrows(), 0);
  mpz_class denom;
  mpz_class g;
  mpz_class ma;
  mpz_class mb;

  for (std::size_t i = 0; i < m.nrows(); ++i) {
    touched.clear();
    std::priority_queue<std::int32_t, std::vector<std::int32_t>, std::greater<>> heap;
    std::vector<std::int32_t> pushed;
    auto touch = [&](std::uint32_t c) {
      if (!touched_flag[c]) {
        touched_flag[c] = 1;
        touched.push_back(c);
      }
      const std::int32_t k = pivot_row[c];
      if (k >= 0 && !queued[k]) {
        queued[k] = 1;
        pushed.push_back(k);
        heap.push(k);
      }
    };
    denom = 1;
    for (const auto& e : m.rows[i].entries) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), e.coef.value.get_den_mpz_t());
    for (const auto& e : m.rows[i].entries) {
      mpz_divexact(g.get_mpz_t(), denom.get_mpz_t(), e.coef.value.get_den_mpz_t());
      scratch[e.col] = e.coef.value.get_num() * g;
      touch(e.col);
    }
    bool modified = false;
    while (!heap.empty()) {
      const std::int32_t k = heap.top();
      heap.pop();
      const auto c = static_cast<std::uint32_t>(u.rows[k].pivot);
      if (sgn(scratch[c]) == 0) continue;
      modified = true;
      mpz_gcd(g.get_mpz_t(), scratch[c].get_mpz_t(), pivot_coef[k].get_mpz_t());
      mpz_divexact(ma.get_mpz_t(), scratch[c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(mb.get_mpz_t(), pivot_coef[k].get_mpz_t(), g.get_mpz_t());
      if (mb != 1) {
        for (auto t : touched) {
          if (sgn(scratch[t]) != 0) scratch[t] *= mb;
        }
      }
      for (const auto& [col, v] : irows[k]) {
        if (col == c) continue;
        mpz_submul(scratch[col].get_mpz_t(), ma.get_mpz_t(), v.get_mpz_t());
        touch(col);
      }
      scratch[c] = 0;
    }
    for (auto k : pushed) queued[k] = 0;

    std::sort(touched.begin(), touched.end());
    std::vector<std::pair<std::uint32_t, mpz_class>> irow;
    g = 0;
    for (auto c : touched) {
      touched_flag[c] = 0;
      if (sgn(scratch[c]) != 0) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scratch[c].get_mpz_t());
        irow.emplace_back(c, std::move(scratch[c]));
      }
      scratch[c] = 0;
    }
    if (g > 1) {
      for (auto& [c, v] : irow) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }

    MatrixRow row;
    row.sig = m.rows[i].sig;
    if (modified) {
      row.entries.reserve(irow.size());
      for (const auto& [c, v] : irow) row.entries.push_back({c, Coeff{mpq_class(v)}});
    } else {
      row.entries = m.rows[i].entries;
    }
    std::int32_t best = -1;
    std::int64_t best_val = 0;
    for (const auto& [c, v] : irow) {
      const std::int64_t val = vctx.valuation(v);
      if (best < 0 || ring.order().compare_terms(val, m.columns[c], best_val, m.columns[best]) > 0) {
        best = static_cast<std::int32_t>(c);
        best_val = val;
      }
    }
    row.pivot = best;
    if (best >= 0) {
      pivot_row[best] = static_cast<std::int32_t>(i);
      for (const auto& [c, v] : irow) {
        if (c == static_cast<std::uint32_t>(best)) pivot_coef.push_back(v);
      }
    } else {
      pivot_coef.emplace_back();
    }
    irows.push_back(std::move(irow));
    u.rows.push_back(std::move(row));
  }
  return u;
}

}  // namespace

MacaulayMatrix tropical_lup(const MacaulayMatrix& m, const PolyRing& ring) {
  const CoeffField& field = ring.field();
  if (!field.tracked()) return lup_integer(m, ring);
  MacaulayMatrix u;
  u.columns = m.columns;
  u.rows.reserve(m.nrows());
  const std::size_t ncols = m.ncols();
  std::vector<std::int32_t> pivot_row(ncols, -1);
  std::vector<Coeff> pivot_coef;
  pivot_coef.reserve(m.nrows());
  std::vector<Coeff> scratch(ncols);
  std::vector<char> touched_flag(ncols, 0);
  std::vector<std::uint32_t> touched;
  std::vector<char> queued(m.nrows(), 0);

  for (std::size_t i = 0; i < m.nrows(); ++i) {
    touched.clear();
    std::priority_queue<std::int32_t, std::vector<std::int32_t>, std::greater<>> heap;
    std::vector<std::int32_t> pushed;
    auto touch = [&](std::uint32_t c) {
      if (!touched_flag[c]) {
        touched_flag[c] = 1;
        touched.push_back(c);
      }
      const std::int32_t k = pivot_row[c];
      if (k >= 0 && !queued[k]) {
        queued[k] = 1;
        pushed.push_back(k);
        heap.push(k);
      }
    };
    for (const auto& e : m.rows[i].entries) {
      scratch[e.col] = e.coef;
      touch(e.col);
    }
    while (!heap.empty()) {
      const std::int32_t k = heap.top();
      heap.pop();
      const auto c = static_cast<std::uint32_t>(u.rows[k].pivot);
      if (scratch[c].is_zero()) continue;
      const Coeff f = field.div(scratch[c], pivot_coef[k]);
      for (const auto& e : u.rows[k].entries) {
        if (e.col == c) continue;
        scratch[e.col] = field.sub_mul(scratch[e.col], f, e.coef);
        touch(e.col);
      }
      scratch[c] = Coeff{};
    }
    for (auto k : pushed) queued[k] = 0;

    MatrixRow row;
    row.sig = m.rows[i].sig;
    std::sort(touched.begin(), touched.end());
    for (auto c : touched) {
      touched_flag[c] = 0;
      if (!scratch[c].is_zero()) row.entries.push_back({c, std::move(scratch[c])});
      scratch[c] = Coeff{};
    }
    row.pivot = greatest_term_column(row, u, ring);
    if (row.pivot >= 0) {
      pivot_row[row.pivot] = static_cast<std::int32_t>(i);
      pivot_coef.push_back(*find_entry(row.entries, static_cast<std::uint32_t>(row.pivot)));
    } else {
      pivot_coef.emplace_back();
    }
    u.rows.push_back(std::move(row));
  }
  return u;
}

MacaulayMatrix tropical_row_echelon(const MacaulayMatrix& m, EchelonMode mode, const PolyRing& ring) {
  const CoeffField& field = ring.field();
  MacaulayMatrix u = m;
  const std::size_t n = u.nrows();
  std::vector<char> done(n, 0);
  std::vector<std::int32_t> best(n, -1);
  for (std::size_t r = 0; r < n; ++r) {
    u.rows[r].pivot = -1;
    best[r] = greatest_term_column(u.rows[r], u, ring);
    if (best[r] < 0) done[r] = 1;
  }
  for (;;) {
    std::int32_t p = -1;
    std::int64_t p_val = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r]) continue;
      const std::int64_t v = field.valuation(*find_entry(u.rows[r].entries, best[r]));
      if (p < 0 || ring.order().compare_terms(v, u.columns[best[r]], p_val, u.columns[best[p]]) > 0) {
        p = static_cast<std::int32_t>(r);
        p_val = v;
      }
    }
    if (p < 0) break;
    const auto c = static_cast<std::uint32_t>(best[p]);
    done[p] = 1;
    u.rows[p].pivot = best[p];
    const Coeff pc = *find_entry(u.rows[p].entries, c);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == static_cast<std::size_t>(p)) continue;
      if (done[r] && (mode == EchelonMode::leading_only || u.rows[r].pivot < 0)) continue;
      const Coeff* a = find_entry(u.rows[r].entries, c);
      if (!a) continue;
      const Coeff f = field.div(*a, pc);
      axpy(u.rows[r].entries, f, u.rows[p].entries, field);
      remove_entry(u.rows[r].entries, c);
      if (!done[r]) {
        best[r] = greatest_term_column(u.rows[r], u, ring);
        if (best[r] < 0) done[r] = 1;
      }
    }
  }
  return u;
}

bool is_tropical_row_echelon(const MacaulayMatrix& m, const PolyRing& ring) {
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    const std::int32_t c = greatest_term_column(m.rows[i], m, ring);
    if (c < 0) continue;
    for (std::size_t j = i + 1; j < m.nrows(); ++j) {
      if (find_entry(m.rows[j].entries, static_cast<std::uint32_t>(c))) return false;
    }
  }
  return true;
}

ExtractResult extract_new_polynomials(const MacaulayMatrix& u, const std::vector<LabeledPolynomial>& g,
                                      const SignatureOrderContext& ctx, const PolyRing& ring, unsigned d,
                                      std::size_t exempt_below) {
  ExtractResult out;
  for (std::size_t r = 0; r < u.nrows(); ++r) {
    const MatrixRow& row = u.rows[r];
    if (row.is_zero()) {
      out.zero_rows.push_back(row.sig);
      continue;
    }
    ++out.nonzero_rows;
    const std::int32_t pc = row.pivot >= 0 ? row.pivot : greatest_term_column(row, u, ring);
    const Monomial& lm = u.columns[pc];
    bool reachable = false;
    for (const auto& h : g) {
      const Monomial& hlm = h.poly.leading_monomial();
      if (!hlm.divides(lm)) continue;
      const Signature s = signature_of_multiple(lm / hlm, h.sig);
      if (s.sugar > d && h.sig.index >= exempt_below) continue;
      if (ctx.compare(s, row.sig) <= 0) {
        reachable = true;
        break;
      }
    }
    if (reachable) continue;
    out.fresh.push_back({row_polynomial(u, r, ring), row.sig, true});
  }
  return out;
}

std::string dump_matrix(const MacaulayMatrix& m, const PolyRing& ring) {
  std::string out = "columns:";
  for (const auto& c : m.columns) out += " " + format_monomial(c, ring.names());
  out += "\n";
  for (std::size_t r = 0; r < m.nrows(); ++r) {
    out += "sig=" + format_signature(m.rows[r].sig, ring.names()) + " | ";
    out += format_polynomial(row_polynomial(m, r, ring), ring) + "\n";
  }
  return out;
}

}  // namespace tropgb
