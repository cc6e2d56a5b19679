#include "d21a/charseries.hpp"

#include <map>
#include <stdexcept>

namespace d21a {

ParityCharacter::ParityCharacter(int cutoff, Base base)
    : cutoff_(cutoff), base_(base) {
    if (cutoff < 0) throw std::invalid_argument("character: negative cutoff");
    std::size_t n = static_cast<std::size_t>(cutoff) + 1;
    tab_.assign(n * n * n, ParityCoeff{});
}

const ParityCoeff& ParityCharacter::at(int m1, int m2, int m3) const {
    std::size_t n = static_cast<std::size_t>(cutoff_) + 1;
    return tab_[(static_cast<std::size_t>(m1) * n + m2) * n + m3];
}

ParityCoeff& ParityCharacter::at(int m1, int m2, int m3) {
    std::size_t n = static_cast<std::size_t>(cutoff_) + 1;
    return tab_[(static_cast<std::size_t>(m1) * n + m2) * n + m3];
}

std::string ParityCharacter::to_csv() const {
    std::string out = "m1,m2,m3,d0,d1\n";
    for (int m1 = 0; m1 <= cutoff_; ++m1)
        for (int m2 = 0; m2 <= cutoff_; ++m2)
            for (int m3 = 0; m3 <= cutoff_; ++m3) {
                const ParityCoeff& c = at(m1, m2, m3);
                out += std::to_string(m1) + "," + std::to_string(m2) + "," +
                       std::to_string(m3) + "," + std::to_string(c.even) + "," +
                       std::to_string(c.odd) + "\n";
            }
    return out;
}

ParityCharacter verma_character(const RootSystem& rs, const Base& base, int cutoff) {
    ParityCharacter ch(cutoff, base);
    ch.at(0, 0, 0) = ParityCoeff{1, 0};

    std::vector<std::array<int, 3>> odd_roots, even_roots;
    for (const Root& r : rs.positive_roots(base)) {
        auto co = rs.coords_in_base(base, r);
        if (!co) throw std::logic_error("character: positive root not over the base");
        (r.parity == Parity::odd ? odd_roots : even_roots).push_back(*co);
    }
    if (odd_roots.size() != 4 || even_roots.size() != 3)
        throw std::logic_error("character: unexpected positive root counts");

    // (1 + x^d) with x^d carrying odd parity: descending sweep so each cell
    // is updated from not-yet-touched smaller cells.
    for (const auto& d : odd_roots) {
        for (int m1 = cutoff; m1 >= 0; --m1)
            for (int m2 = cutoff; m2 >= 0; --m2)
                for (int m3 = cutoff; m3 >= 0; --m3) {
                    int s1 = m1 - d[0], s2 = m2 - d[1], s3 = m3 - d[2];
                    if (s1 < 0 || s2 < 0 || s3 < 0) continue;
                    const ParityCoeff& src = ch.at(s1, s2, s3);
                    ParityCoeff& dst = ch.at(m1, m2, m3);
                    dst.even += src.odd;
                    dst.odd += src.even;
                }
    }

    // 1/(1 - x^g) with even parity: ascending sweep accumulates the
    // geometric series exactly inside the box.
    for (const auto& g : even_roots) {
        for (int m1 = 0; m1 <= cutoff; ++m1)
            for (int m2 = 0; m2 <= cutoff; ++m2)
                for (int m3 = 0; m3 <= cutoff; ++m3) {
                    int s1 = m1 - g[0], s2 = m2 - g[1], s3 = m3 - g[2];
                    if (s1 < 0 || s2 < 0 || s3 < 0) continue;
                    const ParityCoeff& src = ch.at(s1, s2, s3);
                    ParityCoeff& dst = ch.at(m1, m2, m3);
                    dst.even += src.even;
                    dst.odd += src.odd;
                }
    }
    return ch;
}

ParityCoeff verma_mult_oracle(const std::array<int, 3>& nu) {
    // Positive roots of the distinguished base.
    static constexpr std::array<std::array<int, 3>, 4> kOdd = {
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}};
    // Even positives are b2+b3, b1+b3, b1+b2; for remainder r the system
    // n2+n3 = r1, n1+n3 = r2, n1+n2 = r3 has the closed-form solution below.
    ParityCoeff out;
    for (int mask = 0; mask < 16; ++mask) {
        std::array<int, 3> r = nu;
        int taken = 0;
        for (int b = 0; b < 4; ++b)
            if (mask & (1 << b)) {
                ++taken;
                for (int i = 0; i < 3; ++i) r[i] -= kOdd[b][i];
            }
        if (r[0] < 0 || r[1] < 0 || r[2] < 0) continue;
        int total = r[0] + r[1] + r[2];
        if (total % 2 != 0) continue;
        int n1 = (-r[0] + r[1] + r[2]) / 2;
        int n2 = (r[0] - r[1] + r[2]) / 2;
        int n3 = (r[0] + r[1] - r[2]) / 2;
        if (n1 < 0 || n2 < 0 || n3 < 0) continue;
        if (taken % 2 == 0)
            ++out.even;
        else
            ++out.odd;
    }
    return out;
}

StabilizedDegree stabilized_degree(const RootSystem& rs, const Base& base, int cutoff) {
    ParityCharacter ch = verma_character(rs, base, cutoff);
    std::array<int, 3> simple_class{};
    for (int i = 0; i < 3; ++i)
        simple_class[i] = RootSystem::coset_class(base.simple[i].c);

    // A basis monomial's parity equals the coset class of its weight, so
    // every cell is concentrated in the slot named by its class.  The value
    // 8 is reached only deep inside the support cone of the even positive
    // roots: cells with one coordinate far larger than the other two lose
    // some subset contributions and stay below 8 even when min(m_i) >= 3.
    // The diagonal ray (m,m,m) sits inside the cone for every base, so it
    // must be fully stabilized from m = 3 on, alternating the two classes.
    StabilizedDegree out;
    bool saw_class[2] = {false, false};
    for (int m1 = 0; m1 <= cutoff; ++m1)
        for (int m2 = 0; m2 <= cutoff; ++m2)
            for (int m3 = 0; m3 <= cutoff; ++m3) {
                const ParityCoeff& c = ch.at(m1, m2, m3);
                int total = static_cast<int>(c.even + c.odd);
                if (total > out.degree) out.degree = total;
                if (static_cast<int>(c.even) > out.even) out.even = static_cast<int>(c.even);
                if (static_cast<int>(c.odd) > out.odd) out.odd = static_cast<int>(c.odd);
                if (c.even > 8 || c.odd > 8 || total > 8) out.bound_ok = false;
                int cls = (m1 * simple_class[0] + m2 * simple_class[1] +
                           m3 * simple_class[2]) % 2;
                if (cls == 0 ? c.odd != 0 : c.even != 0) out.band_parity_ok = false;
                if (m1 >= 3 && m2 >= 3 && m3 >= 3 && total == 8) saw_class[cls] = true;
                if (m1 == m2 && m2 == m3 && m1 >= 3 && total != 8)
                    out.band_parity_ok = false;
            }
    if (cutoff >= 4 && (!saw_class[0] || !saw_class[1])) out.band_parity_ok = false;
    return out;
}

InducedDegree induced_degree(const RootSystem& rs) {
    std::vector<Root> odd;
    for (const Root& r : rs.all_roots())
        if (r.parity == Parity::odd) odd.push_back(r);
    if (odd.size() != 8) throw std::logic_error("induced degree: expected 8 odd roots");

    std::map<std::array<int, 3>, std::uint64_t> expansion;
    for (int mask = 0; mask < 256; ++mask) {
        std::array<int, 3> q{};
        for (int b = 0; b < 8; ++b)
            if (mask & (1 << b))
                for (int i = 0; i < 3; ++i) q[i] += odd[b].c[i];
        ++expansion[q];
    }

    InducedDegree out;
    for (const auto& [q, n] : expansion) {
        if (RootSystem::coset_class(q) == 0)
            out.even_class += n;
        else
            out.odd_class += n;
        out.total += n;
    }
    return out;
}

} // namespace d21a
