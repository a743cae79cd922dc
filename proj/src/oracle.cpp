#include "sblab/oracle.hpp"

#include <algorithm>
#include <map>

#include <gmpxx.h>

#include "sblab/runtime.hpp"

namespace sblab {

namespace {

void gen_exponents(int s, int d, int pos, std::vector<int>& cur, std::vector<Exponent>& out) {
    if (pos == s - 1) {
        cur[static_cast<std::size_t>(pos)] = d;
        out.emplace_back(cur);
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur[static_cast<std::size_t>(pos)] = e;
        gen_exponents(s, d - e, pos + 1, cur, out);
    }
}

struct DegLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        return deg_lex_compare(a, b) == Ordering::Less;
    }
};

// Number of monomials of degree exactly d in s variables, capped.
std::size_t slice_width(int s, int d) {
    std::size_t cap = max_slice_cols();
    unsigned long long n = 1;
    for (int i = 1; i < s; ++i) {
        n = n * static_cast<unsigned long long>(d + i) / static_cast<unsigned long long>(i);
        if (n > cap) return cap + 1;
    }
    return static_cast<std::size_t>(n);
}

void check_columns(std::size_t cols) {
    if (cols > max_slice_cols())
        throw resource_error("oracle slice needs " + std::to_string(cols) +
                             " columns, above the SBLAB_MAX_SLICE_COLS cap of " +
                             std::to_string(max_slice_cols()));
}

// Row space in echelon form over Q, fraction-free: integer rows, elimination
// by cross-multiplication, gcd normalization after each combination.
class EchelonQ {
  public:
    // Reduces v against the current rows; if nonzero remains, inserts it and
    // returns its pivot column, otherwise returns npos.
    std::size_t insert(std::vector<mpz_class> v) {
        std::size_t pivot = reduce(v);
        if (pivot == npos) return npos;
        normalize(v);
        rows_.emplace(pivot, std::move(v));
        return pivot;
    }

    bool reduces_to_zero(std::vector<mpz_class> v) const { return reduce(v) == npos; }

    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> p;
        p.reserve(rows_.size());
        for (const auto& [c, _] : rows_) p.push_back(c);
        return p;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    std::size_t reduce(std::vector<mpz_class>& v) const {
        std::size_t c = first_nonzero(v);
        while (c != npos) {
            auto it = rows_.find(c);
            if (it == rows_.end()) return c;
            const std::vector<mpz_class>& r = it->second;
            mpz_class pivot_val = r[c];
            mpz_class factor = v[c];
            for (std::size_t i = c; i < v.size(); ++i) v[i] = v[i] * pivot_val - r[i] * factor;
            normalize(v);
            c = first_nonzero(v, c + 1);
        }
        return npos;
    }

    static std::size_t first_nonzero(const std::vector<mpz_class>& v, std::size_t from = 0) {
        for (std::size_t i = from; i < v.size(); ++i)
            if (v[i] != 0) return i;
        return npos;
    }

    static void normalize(std::vector<mpz_class>& v) {
        mpz_class g = 0;
        for (const auto& x : v) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) return;
        }
        if (g <= 1) return;
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }

    std::map<std::size_t, std::vector<mpz_class>> rows_;
};

// Same structure over F_p.
class EchelonFp {
  public:
    explicit EchelonFp(std::uint32_t p) : p_(p) {}

    std::size_t insert(std::vector<std::uint64_t> v) {
        std::size_t pivot = reduce(v);
        if (pivot == npos) return npos;
        rows_.emplace(pivot, std::move(v));
        return pivot;
    }

    bool reduces_to_zero(std::vector<std::uint64_t> v) const { return reduce(v) == npos; }

    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> p;
        p.reserve(rows_.size());
        for (const auto& [c, _] : rows_) p.push_back(c);
        return p;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    std::size_t reduce(std::vector<std::uint64_t>& v) const {
        std::size_t c = first_nonzero(v);
        while (c != npos) {
            auto it = rows_.find(c);
            if (it == rows_.end()) return c;
            const auto& r = it->second;
            std::uint64_t factor = v[c] * inverse(r[c]) % p_;
            for (std::size_t i = c; i < v.size(); ++i)
                v[i] = (v[i] + (p_ - r[i] * factor % p_)) % p_;
            c = first_nonzero(v, c + 1);
        }
        return npos;
    }

    std::uint64_t inverse(std::uint64_t a) const {
        // p is prime, a != 0 mod p: Fermat.
        std::uint64_t result = 1, base = a % p_, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return result;
    }

    static std::size_t first_nonzero(const std::vector<std::uint64_t>& v, std::size_t from = 0) {
        for (std::size_t i = from; i < v.size(); ++i)
            if (v[i] != 0) return i;
        return npos;
    }

    std::uint32_t p_;
    std::map<std::size_t, std::vector<std::uint64_t>> rows_;
};

// Column index assignment for a sorted exponent list.
class ColumnMap {
  public:
    explicit ColumnMap(std::vector<Exponent> cols) : cols_(std::move(cols)) {
        for (std::size_t i = 0; i < cols_.size(); ++i) index_.emplace(cols_[i], i);
    }

    std::size_t size() const { return cols_.size(); }
    const Exponent& exponent(std::size_t i) const { return cols_[i]; }
    std::size_t index(const Exponent& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) throw internal_error("exponent outside oracle slice");
        return it->second;
    }

  private:
    std::vector<Exponent> cols_;
    std::map<Exponent, std::size_t, DegLexLess> index_;
};

std::vector<mpz_class> q_row(const Polynomial& f, const ColumnMap& cols) {
    std::vector<mpz_class> v(cols.size(), mpz_class(0));
    mpz_class den_lcm = 1;
    for (const auto& t : f.terms())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                t.coef.rational().get_den().get_mpz_t());
    for (const auto& t : f.terms()) {
        const mpq_class& q = t.coef.rational();
        v[cols.index(t.exp)] = q.get_num() * (den_lcm / q.get_den());
    }
    return v;
}

std::vector<std::uint64_t> fp_row(const Polynomial& f, const ColumnMap& cols) {
    std::vector<std::uint64_t> v(cols.size(), 0);
    for (const auto& t : f.terms()) v[cols.index(t.exp)] = t.coef.residue();
    return v;
}

// Shared driver: inserts all spanning rows, then runs `done` with a
// membership test / pivot extraction closure pair.
class SliceSolver {
  public:
    SliceSolver(const FieldDesc& field, ColumnMap cols)
        : field_(field), cols_(std::move(cols)), fp_(field.kind == FieldKind::PrimeField ? field.p : 3) {}

    void add_row(const Polynomial& f) {
        if (f.is_zero()) return;
        if (field_.kind == FieldKind::Rational)
            q_.insert(q_row(f, cols_));
        else
            fp_.insert(fp_row(f, cols_));
    }

    bool contains(const Polynomial& f) const {
        if (f.is_zero()) return true;
        return field_.kind == FieldKind::Rational ? q_.reduces_to_zero(q_row(f, cols_))
                                                  : fp_.reduces_to_zero(fp_row(f, cols_));
    }

    std::vector<Exponent> pivot_exponents() const {
        std::vector<std::size_t> p =
            field_.kind == FieldKind::Rational ? q_.pivots() : fp_.pivots();
        std::vector<Exponent> out;
        out.reserve(p.size());
        for (std::size_t c : p) out.push_back(cols_.exponent(c));
        return out;
    }

    const ColumnMap& columns() const { return cols_; }

  private:
    FieldDesc field_;
    ColumnMap cols_;
    EchelonQ q_;
    EchelonFp fp_;
};

int max_degree(const std::vector<Polynomial>& gens) {
    int d = 0;
    for (const auto& g : gens) d = std::max(d, g.degree());
    return d;
}

}  // namespace

std::vector<Exponent> exponents_of_degree(int s, int d) {
    check_columns(slice_width(s, d));
    std::vector<Exponent> out;
    std::vector<int> cur(static_cast<std::size_t>(s), 0);
    gen_exponents(s, d, 0, cur, out);
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
}

std::vector<Exponent> exponents_up_to_degree(int s, int d) {
    std::vector<Exponent> out;
    std::size_t total = 0;
    for (int k = 0; k <= d; ++k) {
        total += slice_width(s, k);
        check_columns(total);
        std::vector<int> cur(static_cast<std::size_t>(s), 0);
        gen_exponents(s, k, 0, cur, out);
    }
    std::sort(out.begin(), out.end(), DegLexLess{});
    return out;
}

bool homog_member(const HomogeneousForm& f, const std::vector<HomogeneousForm>& gens) {
    if (f.poly.is_zero()) return true;
    int s = f.poly.context().vars;
    int d = f.form_degree;
    SliceSolver solver(f.poly.context().field, ColumnMap(exponents_of_degree(s, d)));
    for (const auto& h : gens) {
        if (h.poly.is_zero()) continue;
        if (h.poly.context() != f.poly.context())
            throw dimension_error("homogeneous membership: ring context mismatch");
        if (h.form_degree > d) continue;
        for (const auto& g : exponents_of_degree(s, d - h.form_degree))
            solver.add_row(h.poly.times_term(g, Coefficient::one(f.poly.context().field)));
    }
    return solver.contains(f.poly);
}

bool truncated_member(const Polynomial& f, const std::vector<Polynomial>& gens, int degree_bound) {
    if (f.is_zero()) return true;
    int margin_floor = f.degree() + max_degree(gens);
    if (degree_bound <= margin_floor)
        throw input_error("truncation degree " + std::to_string(degree_bound) +
                          " is below the safety margin (need > " + std::to_string(margin_floor) +
                          ")");
    const RingContext& ctx = f.context();
    SliceSolver solver(ctx.field, ColumnMap(exponents_up_to_degree(ctx.vars, degree_bound - 1)));
    Coefficient one = Coefficient::one(ctx.field);
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.context() != ctx) throw dimension_error("truncated membership: ring context mismatch");
        int ord = order_of(g).value();
        for (int gd = 0; gd + ord < degree_bound; ++gd)
            for (const auto& gamma : exponents_of_degree(ctx.vars, gd))
                solver.add_row(g.times_term(gamma, one).truncated(degree_bound - 1));
    }
    return solver.contains(f);
}

std::vector<Exponent> StaircaseResult::all() const {
    std::vector<Exponent> out = certified;
    out.insert(out.end(), provisional.begin(), provisional.end());
    return out;
}

StaircaseResult staircase(const std::vector<Polynomial>& gens, int degree_bound) {
    if (degree_bound < 1) throw input_error("staircase degree bound must be >= 1");
    StaircaseResult result;
    result.degree_bound = degree_bound;
    result.margin = max_degree(gens) + 1;
    std::vector<const Polynomial*> live;
    for (const auto& g : gens)
        if (!g.is_zero()) live.push_back(&g);
    if (live.empty()) return result;

    const RingContext& ctx = live.front()->context();
    SliceSolver solver(ctx.field, ColumnMap(exponents_up_to_degree(ctx.vars, degree_bound)));
    Coefficient one = Coefficient::one(ctx.field);
    // Fill by ascending multiplier degree so pivots appear bottom-up.
    for (int gd = 0; gd <= degree_bound; ++gd) {
        for (const Polynomial* g : live) {
            if (g->context() != ctx) throw dimension_error("staircase: ring context mismatch");
            if (gd + g->degree() > degree_bound) continue;
            for (const auto& gamma : exponents_of_degree(ctx.vars, gd))
                solver.add_row(g->times_term(gamma, one));
        }
    }

    std::vector<Exponent> pivots = solver.pivot_exponents();
    std::sort(pivots.begin(), pivots.end(), DegLexLess{});
    std::vector<Exponent> minimal;
    for (const auto& e : pivots) {
        bool dominated = false;
        for (const auto& m : minimal)
            if (divides(m, e)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(e);
    }
    for (const auto& e : minimal) {
        if (e.degree() <= degree_bound - result.margin)
            result.certified.push_back(e);
        else
            result.provisional.push_back(e);
    }
    return result;
}

}  // namespace sblab
