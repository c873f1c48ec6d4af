#include "ballot/guesser.hpp"

#include <algorithm>

#include "ballot/error.hpp"

namespace ballot {

namespace {

using Row = std::vector<mpz_class>;

void divide_by_content(Row& row) {
    mpz_class g = 0;
    for (const auto& v : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1) {
        for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
}

// Integer basis of the right nullspace, via fraction-free Gauss-Jordan with
// content reduction of every updated row.
std::vector<Row> integer_nullspace(std::vector<Row> m, std::size_t columns) {
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < columns && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        const auto& pivot = m[rank];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || sgn(m[r][c]) == 0) continue;
            const mpz_class scale = m[r][c];
            for (std::size_t j = 0; j < columns; ++j) {
                m[r][j] = m[r][j] * pivot[c] - pivot[j] * scale;
            }
            divide_by_content(m[r]);
        }
        pivot_cols.push_back(c);
        ++rank;
        if (rank == columns) return {};
    }

    std::vector<Row> basis;
    for (std::size_t f = 0; f < columns; ++f) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), f) != pivot_cols.end()) continue;
        std::vector<mpq_class> v(columns, mpq_class(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            v[pivot_cols[i]] = mpq_class(-m[i][f], m[i][pivot_cols[i]]);
            v[pivot_cols[i]].canonicalize();
        }
        mpz_class l = 1;
        for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        Row row(columns);
        for (std::size_t j = 0; j < columns; ++j) {
            row[j] = v[j].get_num() * (l / v[j].get_den());
        }
        basis.push_back(std::move(row));
    }
    return basis;
}

mpz_class power(std::size_t n, std::size_t j) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), n, j);
    return r;
}

Recurrence from_vector(const Row& v, std::size_t order, std::size_t degree, std::size_t offset) {
    Recurrence rec;
    rec.order = order;
    rec.degree = degree;
    rec.offset = offset;
    rec.coeffs.assign(order + 1, std::vector<mpz_class>(degree + 1));
    for (std::size_t i = 0; i <= order; ++i) {
        for (std::size_t j = 0; j <= degree; ++j) rec.coeffs[i][j] = v[i * (degree + 1) + j];
    }
    return rec;
}

std::vector<long> degree_profile(const Recurrence& rec) {
    std::vector<long> profile;
    for (const auto& p : rec.coeffs) {
        long d = -1;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (sgn(p[j]) != 0) d = static_cast<long>(j);
        }
        profile.push_back(d);
    }
    return profile;
}

bool leading_nonzero(const Recurrence& rec) {
    return std::any_of(rec.coeffs.back().begin(), rec.coeffs.back().end(),
                       [](const mpz_class& c) { return sgn(c) != 0; });
}

std::optional<Recurrence> guess_cell(const Sequence& seq, std::size_t order, std::size_t degree) {
    const std::size_t unknowns = (order + 1) * (degree + 1);
    const std::size_t equations = seq.size() - order;
    const std::size_t fitting = equations - kHeldOutEquations;

    std::vector<Row> m;
    m.reserve(fitting);
    for (std::size_t e = 0; e < fitting; ++e) {
        const std::size_t n = seq.offset + e;
        Row row(unknowns);
        for (std::size_t j = 0; j <= degree; ++j) {
            const auto nj = power(n, j);
            for (std::size_t i = 0; i <= order; ++i) row[i * (degree + 1) + j] = nj * seq.at(n + i);
        }
        m.push_back(std::move(row));
    }

    std::optional<Recurrence> best;
    std::vector<long> best_profile;
    for (const auto& v : integer_nullspace(std::move(m), unknowns)) {
        auto rec = from_vector(v, order, degree, seq.offset);
        if (!leading_nonzero(rec)) continue;
        canonicalize(rec);
        if (!verify(rec, seq)) continue;
        auto profile = degree_profile(rec);
        if (!best || profile < best_profile) {
            best = std::move(rec);
            best_profile = std::move(profile);
        }
    }
    return best;
}

}  // namespace

mpz_class Recurrence::evaluate(std::size_t i, std::size_t n) const {
    // Horner.
    const auto& p = coeffs.at(i);
    mpz_class acc = 0;
    for (std::size_t j = p.size(); j-- > 0;) {
        acc *= static_cast<unsigned long>(n);
        acc += p[j];
    }
    return acc;
}

void canonicalize(Recurrence& rec) {
    if (!leading_nonzero(rec)) {
        throw Error(ErrorCode::InvalidArgument, "leading polynomial of a recurrence must be non-zero");
    }
    Row flat;
    for (const auto& p : rec.coeffs) flat.insert(flat.end(), p.begin(), p.end());
    mpz_class g = 0;
    for (const auto& v : flat) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());

    const auto& lead_poly = rec.coeffs.back();
    std::size_t lead = lead_poly.size();
    while (sgn(lead_poly[lead - 1]) == 0) --lead;
    if (sgn(lead_poly[lead - 1]) < 0) g = -g;

    std::size_t degree = 0;
    for (auto& p : rec.coeffs) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            mpz_divexact(p[j].get_mpz_t(), p[j].get_mpz_t(), g.get_mpz_t());
            if (sgn(p[j]) != 0) degree = std::max(degree, j);
        }
    }
    for (auto& p : rec.coeffs) p.resize(degree + 1);
    rec.degree = degree;
}

std::optional<Recurrence> guess(const Sequence& seq, std::size_t max_order, std::size_t max_degree) {
    if (max_order == 0) throw Error(ErrorCode::InvalidArgument, "max_order must be >= 1");
    const std::size_t needed = (max_order + 1) * (max_degree + 1) + max_order + kHeldOutEquations;
    if (seq.size() < needed) {
        throw Error(ErrorCode::InsufficientTerms, "guessing up to order " + std::to_string(max_order) +
                                                      ", degree " + std::to_string(max_degree) + " needs " +
                                                      std::to_string(needed) + " terms, have " +
                                                      std::to_string(seq.size()));
    }
    for (std::size_t order = 1; order <= max_order; ++order) {
        for (std::size_t degree = 0; degree <= max_degree; ++degree) {
            if (auto rec = guess_cell(seq, order, degree)) return rec;
        }
    }
    return std::nullopt;
}

bool verify(const Recurrence& rec, const Sequence& seq) {
    if (seq.empty()) return true;
    const std::size_t start = std::max(rec.offset, seq.offset);
    for (std::size_t n = start; n + rec.order <= seq.last_index(); ++n) {
        mpz_class sum = 0;
        for (std::size_t i = 0; i <= rec.order; ++i) sum += rec.evaluate(i, n) * seq.at(n + i);
        if (sgn(sum) != 0) return false;
    }
    return true;
}

Sequence extend(const Recurrence& rec, const Sequence& seed, std::size_t total) {
    if (seed.size() < rec.order || seed.offset + seed.size() < rec.offset + rec.order) {
        throw Error(ErrorCode::InsufficientTerms, "seed must supply the first " + std::to_string(rec.order) +
                                                      " terms");
    }
    Sequence out = seed;
    out.terms.reserve(std::max(total, seed.size()));
    while (out.size() < total) {
        const std::size_t n = out.offset + out.size() - rec.order;
        const mpz_class lead = rec.evaluate(rec.order, n);
        if (sgn(lead) == 0) {
            throw Error(ErrorCode::SingularLeadingCoefficient,
                        "leading coefficient vanishes at n=" + std::to_string(n));
        }
        mpz_class sum = 0;
        for (std::size_t i = 0; i < rec.order; ++i) sum -= rec.evaluate(i, n) * out.at(n + i);
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), lead.get_mpz_t());
        if (sgn(r) != 0) {
            throw Error(ErrorCode::NonIntegralTerm, "term " + std::to_string(n + rec.order) + " is not an integer");
        }
        out.terms.push_back(std::move(q));
    }
    return out;
}

std::string to_display_string(const Recurrence& rec) {
    auto poly = [](const std::vector<mpz_class>& p) {
        std::string s;
        for (std::size_t j = p.size(); j-- > 0;) {
            if (sgn(p[j]) == 0) continue;
            const bool neg = sgn(p[j]) < 0;
            const mpz_class mag = abs(p[j]);
            if (!s.empty()) s += neg ? "-" : "+";
            else if (neg) s += "-";
            if (j == 0 || mag != 1) s += mag.get_str();
            if (j >= 1) s += "n";
            if (j >= 2) s += "^" + std::to_string(j);
        }
        return s.empty() ? std::string("0") : s;
    };
    std::string out;
    for (std::size_t i = rec.order + 1; i-- > 0;) {
        if (std::all_of(rec.coeffs[i].begin(), rec.coeffs[i].end(), [](const mpz_class& c) { return sgn(c) == 0; })) {
            continue;
        }
        if (!out.empty()) out += " + ";
        out += "(" + poly(rec.coeffs[i]) + ")*x(n" + (i ? "+" + std::to_string(i) : std::string()) + ")";
    }
    return out + " = 0";
}

}  // namespace ballot
