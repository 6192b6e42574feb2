#include "quintic/instanton.hpp"

namespace quintic {

int mobius(int m) {
    if (m <= 0) throw StructureError("Mobius function needs a positive argument");
    int primes = 0;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        m /= p;
        if (m % p == 0) return 0;
        ++primes;
    }
    if (m > 1) ++primes;
    return primes % 2 ? -1 : 1;
}

std::vector<Rational> gw_from_yukawa(const TruncSeries<Rational>& k) {
    if (k.coeff_q(0) != Rational(5))
        throw MalformedCouplingError("Yukawa constant term must be 5, got " +
                                     k.coeff_q(0).to_string());
    std::vector<Rational> n_gw;
    for (long d = 1; d <= k.q_order(); ++d)
        n_gw.push_back(k.coeff_q(static_cast<int>(d)) / Rational(d).pow(3));
    return n_gw;
}

std::vector<Rational> invert_multicover(const std::vector<Rational>& n_gw) {
    std::vector<Rational> n;
    for (int d = 1; d <= static_cast<int>(n_gw.size()); ++d) {
        Rational s;
        for (int m = 1; m <= d; ++m) {
            if (d % m) continue;
            int mu = mobius(m);
            if (mu == 0) continue;
            s += Rational(mu) * n_gw[static_cast<size_t>(d / m - 1)] / Rational(m).pow(3);
        }
        if (!s.is_integer())
            throw IntegralityError("n_" + std::to_string(d) + " is not an integer: " +
                                       s.to_string(),
                                   d, s.to_string());
        n.push_back(std::move(s));
    }
    return n;
}

TruncSeries<Rational> resum_check(const std::vector<Rational>& n, int q_order) {
    TruncSeries<Rational> k(q_order, 0);
    k.set(0, 0, Rational(5));
    for (int j = 1; j <= q_order; ++j) {
        Rational s;
        for (long d = 1; d <= j; ++d)
            if (j % d == 0 && d <= static_cast<long>(n.size()))
                s += n[static_cast<size_t>(d - 1)] * Rational(d).pow(3);
        k.set(j, 0, s);
    }
    return k;
}

InstantonTable instanton_table(int max_degree) {
    TruncSeries<Rational> k =
        yukawa(apply_mirror(i_series(max_degree), build_mirror_map(max_degree)), max_degree);
    std::vector<Rational> n_gw = gw_from_yukawa(k);
    std::vector<Rational> n = invert_multicover(n_gw);
    if (resum_check(n, max_degree) != k)
        throw ConsistencyError("multiple-cover resummation does not reproduce the coupling");
    InstantonTable table{k, {}};
    for (int d = 1; d <= max_degree; ++d)
        table.rows.push_back(
            {d, n_gw[static_cast<size_t>(d - 1)], n[static_cast<size_t>(d - 1)]});
    return table;
}

}  // namespace quintic
