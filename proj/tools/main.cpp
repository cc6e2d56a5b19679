#include "d21a/charseries.hpp"
#include "d21a/criteria.hpp"
#include "d21a/sl2fam.hpp"
#include "d21a/twistloc.hpp"
#include "d21a/verma.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace d21a;
using nlohmann::ordered_json;

namespace {

Scalar parse_alpha_opt(const std::string& s)
{
    if (s == "symbolic" || s == "a") return Scalar::alpha();
    Scalar v = parse_scalar(s);
    if (!v.is_constant())
        throw std::invalid_argument("--alpha must be a rational constant or \"symbolic\"");
    return v;
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::array<Scalar, 3> parse_scalar_triple(const std::string& s, const char* what)
{
    auto parts = split_commas(s);
    if (parts.size() != 3)
        throw std::invalid_argument(std::string(what) + " wants three comma-separated values");
    return {parse_scalar(parts[0]), parse_scalar(parts[1]), parse_scalar(parts[2])};
}

std::array<int, 3> parse_int_triple(const std::string& s, const char* what)
{
    auto parts = split_commas(s);
    if (parts.size() != 3)
        throw std::invalid_argument(std::string(what) + " wants three comma-separated integers");
    std::array<int, 3> out{};
    for (int i = 0; i < 3; ++i) {
        std::size_t pos = 0;
        out[i] = std::stoi(parts[i], &pos);
        while (pos < parts[i].size() && parts[i][pos] == ' ') ++pos;
        if (pos != parts[i].size())
            throw std::invalid_argument(std::string(what) + ": bad integer '" + parts[i] + "'");
    }
    return out;
}

void emit(const std::string& path, const std::string& content)
{
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << content;
}

std::string run_report(const Scalar& alpha, const std::array<Scalar, 3>& lam3, int cutoff,
                       const std::string& format)
{
    RootSystem rs(alpha);
    Weight lam{{lam3[0], lam3[1], lam3[2]}};
    CuspidalReport rep = classify(rs, lam);

    struct Row {
        std::array<int, 3> nu;
        int verma;
        int simple;
    };
    std::vector<Row> rows;
    int max_simple = 0;
    if (cutoff > 0) {
        AlgebraTable alg = AlgebraTable::build(alpha);
        VermaModule mod(alg, lam);
        for (int x = 0; x <= cutoff; ++x)
            for (int y = 0; y <= cutoff; ++y)
                for (int z = 0; z <= cutoff; ++z) {
                    Row r{{x, y, z}, mod.verma_dim({x, y, z}), mod.simple_mult({x, y, z})};
                    if (r.simple > max_simple) max_simple = r.simple;
                    rows.push_back(r);
                }
    }

    if (format == "json") {
        ordered_json j;
        j["alpha"] = alpha.str();
        j["lambda"] = {lam3[0].str(), lam3[1].str(), lam3[2].str()};
        j["report"] = ordered_json::parse(report_to_json(rep));
        if (cutoff > 0) {
            j["cutoff"] = cutoff;
            j["max_simple_mult"] = max_simple;
            ordered_json arr = ordered_json::array();
            for (const Row& r : rows)
                arr.push_back({r.nu[0], r.nu[1], r.nu[2], r.verma, r.simple});
            j["weight_spaces"] = arr;
        }
        return j.dump() + "\n";
    }

    std::ostringstream out;
    out << "alpha: " << alpha.str() << "\n";
    out << "lambda: (" << lam3[0].str() << ", " << lam3[1].str() << ", " << lam3[2].str()
        << ")\n";
    out << "c values: (" << rep.c[0].str() << ", " << rep.c[1].str() << ", " << rep.c[2].str()
        << ")\n";
    out << "typical: " << (rep.typical ? "yes" : "no") << "\n";
    out << "zero entries: " << rep.zero_count << "\n";
    out << "even lowering maps all injective: " << (rep.inj_full ? "yes" : "no") << "\n";
    out << "predicted cuspidal degree: " << rep.predicted_degree << "\n";
    if (cutoff > 0) {
        out << "weight spaces up to depth " << cutoff << " (nu, verma, simple):\n";
        for (const Row& r : rows) {
            out << "  " << r.nu[0] << "," << r.nu[1] << "," << r.nu[2] << "  " << r.verma
                << "  " << r.simple << "\n";
        }
        out << "max simple multiplicity in the box: " << max_simple << "\n";
    }
    return out.str();
}

std::string run_char(const Scalar& alpha, int base_idx, int cutoff, const std::string& format)
{
    RootSystem rs(alpha);
    auto bases = rs.bases();
    if (base_idx < 0 || base_idx >= int(bases.size()))
        throw std::invalid_argument("--base must be in 0.." + std::to_string(bases.size() - 1));
    const Base& base = bases[base_idx];
    ParityCharacter ch = verma_character(rs, base, cutoff);

    if (format == "csv") return ch.to_csv();
    if (format == "json") {
        ordered_json j;
        j["alpha"] = alpha.str();
        j["base"] = base_idx;
        ordered_json simples = ordered_json::array();
        for (const Root& s : base.simple) simples.push_back({s.c[0], s.c[1], s.c[2]});
        j["simple_roots"] = simples;
        j["cutoff"] = cutoff;
        ordered_json arr = ordered_json::array();
        for (int x = 0; x <= cutoff; ++x)
            for (int y = 0; y <= cutoff; ++y)
                for (int z = 0; z <= cutoff; ++z) {
                    const ParityCoeff& c = ch.at(x, y, z);
                    arr.push_back({x, y, z, c.even, c.odd});
                }
        j["rows"] = arr;
        return j.dump() + "\n";
    }

    std::ostringstream out;
    out << "base " << base_idx << ", simple roots";
    for (const Root& s : base.simple)
        out << " (" << s.c[0] << "," << s.c[1] << "," << s.c[2] << ")";
    out << "\n";
    out << "m1 m2 m3 even odd\n";
    for (int x = 0; x <= cutoff; ++x)
        for (int y = 0; y <= cutoff; ++y)
            for (int z = 0; z <= cutoff; ++z) {
                const ParityCoeff& c = ch.at(x, y, z);
                out << x << " " << y << " " << z << " " << c.even << " " << c.odd << "\n";
            }
    return out.str();
}

std::string run_gram(const Scalar& alpha, const std::array<Scalar, 3>& lam3,
                     const std::array<int, 3>& nu, const std::string& format)
{
    AlgebraTable alg = AlgebraTable::build(alpha);
    Weight lam{{lam3[0], lam3[1], lam3[2]}};
    VermaModule mod(alg, lam);
    auto basis = mod.weight_basis(nu);
    ScalarMatrix g = mod.gram(nu);
    int rank = rank_fraction_free(g);

    if (format == "csv") {
        std::string out = "i,j,entry\n";
        for (int i = 0; i < g.rows; ++i)
            for (int j = 0; j < g.cols; ++j)
                out += std::to_string(i) + "," + std::to_string(j) + "," + g.at(i, j).str() +
                       "\n";
        return out;
    }
    if (format == "json") {
        ordered_json j;
        j["alpha"] = alpha.str();
        j["lambda"] = {lam3[0].str(), lam3[1].str(), lam3[2].str()};
        j["weight"] = {nu[0], nu[1], nu[2]};
        j["dimension"] = int(basis.size());
        ordered_json bs = ordered_json::array();
        for (const PbwMono& m : basis) bs.push_back(m.str());
        j["basis"] = bs;
        ordered_json rowsj = ordered_json::array();
        for (int i = 0; i < g.rows; ++i) {
            ordered_json row = ordered_json::array();
            for (int jj = 0; jj < g.cols; ++jj) row.push_back(g.at(i, jj).str());
            rowsj.push_back(row);
        }
        j["entries"] = rowsj;
        j["rank"] = rank;
        return j.dump() + "\n";
    }

    std::ostringstream out;
    out << "weight depth: (" << nu[0] << "," << nu[1] << "," << nu[2] << ")\n";
    out << "dimension: " << basis.size() << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i)
        out << "basis[" << i << "] = " << basis[i].str() << "\n";
    for (int i = 0; i < g.rows; ++i) {
        out << " ";
        for (int j = 0; j < g.cols; ++j) out << " " << g.at(i, j).str();
        out << "\n";
    }
    out << "rank: " << rank << "\n";
    return out.str();
}

std::string run_family(const Scalar& a, const Scalar& mu, int lo, int hi,
                       const std::string& format)
{
    if (lo > hi) throw std::invalid_argument("--lo must not exceed --hi");
    FamilyPoint p{a, mu, lo, hi};
    bool cuspidal = is_simple_cuspidal(a, mu);

    if (format == "csv") return family_csv(p);
    if (format == "json") {
        ordered_json j;
        j["a"] = a.str();
        j["mu"] = mu.str();
        j["lo"] = lo;
        j["hi"] = hi;
        j["simple_cuspidal"] = cuspidal;
        j["casimir"] = casimir_scalar(a).str();
        ordered_json arr = ordered_json::array();
        for (int n = lo; n <= hi; ++n) {
            Scalar s = mu + Scalar::from_int(n);
            arr.push_back({{"s", s.str()},
                           {"e", family_action(a, Sl2Gen::e, s).coeff.str()},
                           {"f", family_action(a, Sl2Gen::f, s).coeff.str()},
                           {"h", family_action(a, Sl2Gen::h, s).coeff.str()}});
        }
        j["rows"] = arr;
        return j.dump() + "\n";
    }

    std::ostringstream out;
    out << "a: " << a.str() << ", mu: " << mu.str() << ", window: [" << lo << ", " << hi
        << "]\n";
    out << "simple cuspidal: " << (cuspidal ? "yes" : "no") << "\n";
    out << "casimir scalar: " << casimir_scalar(a).str() << "\n";
    auto ek = e_annihilated(p);
    auto fk = f_annihilated(p);
    out << "e-annihilated exponents:";
    for (const Scalar& s : ek) out << " " << s.str();
    out << "\n";
    out << "f-annihilated exponents:";
    for (const Scalar& s : fk) out << " " << s.str();
    out << "\n";
    out << "s  e  f  h\n";
    for (int n = lo; n <= hi; ++n) {
        Scalar s = mu + Scalar::from_int(n);
        out << s.str() << "  " << family_action(a, Sl2Gen::e, s).coeff.str() << "  "
            << family_action(a, Sl2Gen::f, s).coeff.str() << "  "
            << family_action(a, Sl2Gen::h, s).coeff.str() << "\n";
    }
    return out.str();
}

std::string run_twist(const Scalar& lambda, const Scalar& mu, int lo, int hi,
                      const std::string& format)
{
    TwistedTable t = twist_highest_weight(lambda, mu, lo, hi);

    if (format == "csv") return t.to_csv();
    if (format == "json") {
        ordered_json j;
        j["lambda"] = t.lambda.str();
        j["mu"] = t.mu.str();
        j["lo"] = t.lo;
        j["hi"] = t.hi;
        ordered_json arr = ordered_json::array();
        for (int k = t.lo; k <= t.hi; ++k) {
            int i = k - t.lo;
            arr.push_back({{"k", k},
                           {"e", t.e_coeff[i].str()},
                           {"h", t.h_coeff[i].str()},
                           {"f", t.f_coeff[i].str()}});
        }
        j["rows"] = arr;
        return j.dump() + "\n";
    }

    std::ostringstream out;
    out << "lambda: " << t.lambda.str() << ", mu: " << t.mu.str() << ", window: [" << t.lo
        << ", " << t.hi << "]\n";
    out << "k  e  h  f\n";
    for (int k = t.lo; k <= t.hi; ++k) {
        int i = k - t.lo;
        out << k << "  " << t.e_coeff[i].str() << "  " << t.h_coeff[i].str() << "  "
            << t.f_coeff[i].str() << "\n";
    }
    return out.str();
}

int run_selftest()
{
    int failures = 0;
    auto check = [&](bool ok, const char* name) {
        std::cout << (ok ? "ok" : "FAIL") << ": " << name << "\n";
        if (!ok) ++failures;
    };

    RootSystem rs;
    check(rs.all_roots().size() == 14, "root inventory has 14 roots");
    check(rs.bases().size() == 4, "four bases under odd reflections");

    AlgebraTable alg = AlgebraTable::build(Scalar::alpha());
    int bad = 0;
    for (int i = 0; i < kAlgDim; ++i)
        for (int j = 0; j < kAlgDim; ++j)
            for (int k = 0; k < kAlgDim; ++k) {
                GElem x = GElem::basis(i), y = GElem::basis(j), z = GElem::basis(k);
                bool oi = alg.parity(i) == Parity::odd, oj = alg.parity(j) == Parity::odd,
                     ok2 = alg.parity(k) == Parity::odd;
                GElem lhs = alg.bracket(alg.bracket(x, y), z);
                GElem mid = alg.bracket(y, alg.bracket(x, z));
                if (oi && oj) mid = -mid;
                GElem rhs = alg.bracket(x, alg.bracket(y, z));
                lhs += mid;
                lhs -= rhs;
                if (!lhs.is_zero()) ++bad;
                (void)ok2;
            }
    check(bad == 0, "super Jacobi identity over all basis triples");

    ParityCharacter ch = verma_character(rs, rs.distinguished(), 4);
    bool chok = true;
    for (int x = 0; x <= 4 && chok; ++x)
        for (int y = 0; y <= 4 && chok; ++y)
            for (int z = 0; z <= 4 && chok; ++z)
                if (ch.at(x, y, z) != verma_mult_oracle({x, y, z})) chok = false;
    check(chok, "character series matches the enumeration oracle");

    Weight lam{{Scalar::from_rat(Rat(5, 3)), Scalar::from_rat(Rat(7, 2)), Scalar::from_int(-2)}};
    VermaModule mod(alg, lam);
    ScalarMatrix g = mod.gram({1, 1, 0});
    Scalar det = g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0);
    Scalar want = -(lam.v[0] * lam.v[1] * (lam.v[0] + lam.v[1] - Scalar::one()));
    check(det == want, "contravariant 2x2 determinant matches the closed form");

    StabilizedDegree sd = stabilized_degree(rs, rs.distinguished(), 8);
    check(sd.degree == 8 && sd.even == 8 && sd.odd == 8 && sd.bound_ok && sd.band_parity_ok,
          "stabilized degree is 8 with graded split (8,8)");

    check(check_homomorphism(Scalar::from_rat(Rat(1, 2))), "twisted generators present sl2");
    LocalizedElement e = LocalizedElement::gen_e();
    check(phi(phi(e, Scalar::alpha()), Scalar::from_int(2)) ==
              phi(e, Scalar::alpha() + Scalar::from_int(2)),
          "twists compose additively");

    check(verify_sl2_relations({Scalar::alpha(), Scalar::zero(), -4, 4}),
          "family window satisfies the sl2 relations");
    bool cas = true;
    for (int s = -3; s <= 3; ++s)
        if (casimir_at(Scalar::alpha(), Scalar::from_int(s)) != casimir_scalar(Scalar::alpha()))
            cas = false;
    check(cas, "casimir scalar is exponent independent");

    std::cout << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact toolkit for the one-parameter 17-dimensional Lie superalgebra family"};
    app.require_subcommand(1);

    std::string alpha_str = "symbolic";
    std::string lambda_str;
    std::string weight_str = "0,0,0";
    std::string a_str = "1/2", mu_str = "0";
    std::string format = "text";
    std::string out_path;
    int cutoff = 6;
    int base_idx = 0;
    int lo = -4, hi = 4;

    CLI::App* rep = app.add_subcommand("report", "classify a highest weight");
    rep->add_option("--alpha", alpha_str, "parameter value or \"symbolic\"");
    rep->add_option("--lambda", lambda_str, "highest weight, three comma-separated values")
        ->required();
    rep->add_option("--cutoff", cutoff, "also tabulate weight spaces up to this depth per axis")
        ->default_val(0);
    rep->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    rep->add_option("--out", out_path, "write to a file instead of stdout");

    CLI::App* chc = app.add_subcommand("char", "graded character of a highest weight module");
    chc->add_option("--alpha", alpha_str, "parameter value or \"symbolic\"");
    chc->add_option("--base", base_idx, "base index, 0 = distinguished")
        ->check(CLI::Range(0, 3));
    chc->add_option("--cutoff", cutoff)->check(CLI::Range(0, 16));
    chc->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    chc->add_option("--out", out_path);

    CLI::App* grm = app.add_subcommand("gram", "contravariant form on one weight space");
    grm->add_option("--alpha", alpha_str);
    grm->add_option("--lambda", lambda_str)->required();
    grm->add_option("--weight", weight_str, "depth below the highest weight, three integers")
        ->required();
    grm->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    grm->add_option("--out", out_path);

    CLI::App* fam = app.add_subcommand("family", "weight family window of one sl2 factor");
    fam->add_option("--a", a_str, "family parameter");
    fam->add_option("--mu", mu_str, "coset shift of the exponents");
    fam->add_option("--lo", lo);
    fam->add_option("--hi", hi);
    fam->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    fam->add_option("--out", out_path);

    CLI::App* twi = app.add_subcommand("twist", "twisted localization of a highest weight line");
    twi->add_option("--lambda", lambda_str, "highest weight value (one scalar)")->required();
    twi->add_option("--mu", mu_str, "twist exponent");
    twi->add_option("--lo", lo)->default_val(-3);
    twi->add_option("--hi", hi)->default_val(3);
    twi->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));
    twi->add_option("--out", out_path);

    CLI::App* st = app.add_subcommand("selftest", "run the built-in consistency checks");
    (void)st;

    CLI11_PARSE(app, argc, argv);

    try {
        if (*st) return run_selftest();

        std::string output;
        if (*rep) {
            output = run_report(parse_alpha_opt(alpha_str),
                                parse_scalar_triple(lambda_str, "--lambda"), cutoff, format);
        } else if (*chc) {
            output = run_char(parse_alpha_opt(alpha_str), base_idx, cutoff, format);
        } else if (*grm) {
            output = run_gram(parse_alpha_opt(alpha_str),
                              parse_scalar_triple(lambda_str, "--lambda"),
                              parse_int_triple(weight_str, "--weight"), format);
        } else if (*fam) {
            output = run_family(parse_scalar(a_str), parse_scalar(mu_str), lo, hi, format);
        } else if (*twi) {
            output = run_twist(parse_scalar(lambda_str), parse_scalar(mu_str), lo, hi, format);
        }
        emit(out_path, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
