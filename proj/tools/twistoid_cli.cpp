// Command-line front end: classify, enumerate, verify, table, cover.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid parameters,
// 3 oracle complexity bound exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twistoid/covers.hpp"
#include "twistoid/flag_complex.hpp"
#include "twistoid/group.hpp"
#include "twistoid/report.hpp"
#include "twistoid/twist.hpp"

namespace {

using namespace twistoid;

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw InvalidParameters("cannot parse rational value '" + s + "'");
    }
}

long long encode_units(const std::string& s, long long units, const std::string& name) {
    Rational v = parse_rational(s) * Rational(units);
    if (!v.is_integer())
        throw InvalidParameters(name + " must be a multiple of 1/" + std::to_string(units));
    return v.as_integer();
}

struct ParamInput {
    std::string manifold;
    long long c = 1, n = 1, m = 1, a = 0, b = 0;
    std::string p1 = "0", p2 = "0", p3 = "0", q3 = "0", p = "0", q = "0";

    void register_options(CLI::App* cmd) {
        cmd->add_option("manifold", manifold, "dicosm-axial|dicosm-diagonal|tricosm|tetracosm|hexacosm")
            ->required();
        cmd->add_option("--c", c, "translational norm c (dicosm-axial, tetracosm)");
        cmd->add_option("--n", n, "integer n with c = n*sqrt(2)/2 (dicosm-diagonal)");
        cmd->add_option("--m", m, "integer m with c = m/sqrt(3) (tricosm)");
        cmd->add_option("--a", a, "tricosm axis offset a");
        cmd->add_option("--b", b, "tricosm axis offset b");
        cmd->add_option("--p1", p1, "rational p1 (dicosm)");
        cmd->add_option("--p2", p2, "rational p2 (dicosm)");
        cmd->add_option("--p3", p3, "rational p3 (dicosm)");
        cmd->add_option("--q3", q3, "rational q3 (dicosm)");
        cmd->add_option("--p", p, "rational p (tetracosm)");
        cmd->add_option("--q", q, "rational q (tetracosm)");
    }

    TwistoidParams build() const {
        TwistoidParams out;
        if (manifold == "hexacosm") build_hexacosm_group();
        if (manifold == "dicosm-axial") {
            out.value = DicosmAxialParams{c, encode_units(p1, 2, "p1"), encode_units(p2, 2, "p2"),
                                          encode_units(p3, 2, "p3"), encode_units(q3, 2, "q3")};
        } else if (manifold == "dicosm-diagonal") {
            out.value = DicosmDiagonalParams{n, encode_units(p1, 4, "p1"), encode_units(p2, 4, "p2"),
                                             encode_units(p3, 4, "p3"), encode_units(q3, 2, "q3")};
        } else if (manifold == "tricosm") {
            out.value = TricosmParams{m, a, b};
        } else if (manifold == "tetracosm") {
            out.value = TetracosmParams{c, encode_units(p, 2, "p"), encode_units(q, 2, "q")};
        } else {
            throw InvalidParameters("unknown manifold '" + manifold + "'");
        }
        return validate(out);
    }
};

std::vector<TwistoidParams> enumerate_axial(long long maxC, long long maxP2, long long maxQ3) {
    std::vector<TwistoidParams> out;
    for (long long C = 1; C <= maxC; ++C)
        for (long long P1 = 0; P1 <= 1; ++P1)
            for (long long P2 = P1 + 1; P2 <= maxP2; ++P2) {
                if (P1 == 1 && P2 % 2 == 0) continue;
                for (long long P3 = P1; P3 < P2; ++P3)
                    for (long long Q3 = 1; Q3 <= maxQ3; ++Q3) {
                        if (P1 == 1 && Q3 % 2 == 0 && P3 % 2 == 0) continue;
                        out.push_back(TwistoidParams{DicosmAxialParams{C, P1, P2, P3, Q3}});
                    }
            }
    return out;
}

std::vector<TwistoidParams> enumerate_diagonal(long long maxN, long long maxP2, long long maxQ3) {
    std::vector<TwistoidParams> out;
    for (long long N = 1; N <= maxN; ++N) {
        long long P1 = (N % 2 == 0) ? 0 : 1;
        for (long long P2 = P1 + 2; P2 <= maxP2; P2 += 2)
            for (long long P3 = P1; P3 < P2; P3 += 2)
                for (long long Q3 = 1; Q3 <= maxQ3; ++Q3)
                    out.push_back(TwistoidParams{DicosmDiagonalParams{N, P1, P2, P3, Q3}});
    }
    return out;
}

std::vector<TwistoidParams> enumerate_tricosm(long long maxM, long long maxAB) {
    std::vector<TwistoidParams> out;
    for (long long M = 1; M <= maxM; ++M)
        for (long long a = 1; a <= maxAB; ++a)
            for (long long b = 0; b <= maxAB; ++b)
                out.push_back(TwistoidParams{TricosmParams{M, a, b}});
    return out;
}

std::vector<TwistoidParams> enumerate_tetracosm(long long maxC, long long maxPQ) {
    std::vector<TwistoidParams> out;
    for (long long C = 1; C <= maxC; ++C)
        for (long long P = 1; P <= maxPQ; ++P)
            for (long long Q = 0; Q <= P; ++Q)
                out.push_back(TwistoidParams{TetracosmParams{C, P, Q}});
    return out;
}

struct GridBounds {
    long long maxC = 1, maxN = 2, maxM = 6, maxAB = 4, maxPQ = 4, maxP2 = 42, maxQ3 = 10;
};

std::vector<TwistoidParams> enumeration_grid(const std::string& manifold, const GridBounds& b) {
    if (manifold == "dicosm-axial") return enumerate_axial(b.maxC, b.maxP2, b.maxQ3);
    if (manifold == "dicosm-diagonal") return enumerate_diagonal(b.maxN, b.maxP2, b.maxQ3);
    if (manifold == "tricosm") return enumerate_tricosm(b.maxM, b.maxAB);
    if (manifold == "tetracosm") return enumerate_tetracosm(b.maxC, b.maxPQ);
    throw InvalidParameters("unknown manifold '" + manifold + "'");
}

int run_classify(const ParamInput& input, const std::string& format, bool withCover, bool withOracle,
                 long long maxFlags) {
    OutputRecord rec = make_record(input.build(), withCover, withOracle, maxFlags);
    if (format == "json")
        std::cout << to_json(rec) << "\n";
    else if (format == "csv")
        std::cout << to_csv_header() << "\n" << to_csv_row(rec) << "\n";
    else
        std::cout << to_text(rec);
    if (rec.oracle && !rec.oracle->pass) return 1;
    return 0;
}

int run_enumerate(const std::string& manifold, const GridBounds& bounds, bool familiesOnly,
                  const std::string& format) {
    auto grid = enumeration_grid(manifold, bounds);
    std::vector<TwistoidParams> sorted;
    sorted.reserve(grid.size());
    for (const auto& p : grid) sorted.push_back(validate(p));
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end(),
                             [](const auto& a, const auto& b) { return a == b; }),
                 sorted.end());

    if (!familiesOnly) {
        if (format == "csv") std::cout << to_csv_header() << "\n";
        for (const auto& p : sorted) {
            OutputRecord rec = make_record(p, false, false);
            std::cout << (format == "csv" ? to_csv_row(rec) : to_json(rec)) << "\n";
        }
        return 0;
    }
    std::map<std::string, TwistoidParams> families;
    for (const auto& p : sorted) {
        auto rep = classify(p);
        families.emplace(rep.familyId, p);
    }
    for (const auto& [family, witness] : families) {
        OutputRecord rec = make_record(witness, false, false);
        std::cout << to_json(rec) << "\n";
    }
    std::cout << "families: " << families.size() << "\n";
    return 0;
}

int verify_grid(const std::vector<TwistoidParams>& grid, long long maxFlags, long long& pass,
                long long& fail, long long& skipped) {
    for (const auto& raw : grid) {
        TwistoidParams p = validate(raw);
        if (flag_count(p) > maxFlags) {
            ++skipped;
            continue;
        }
        VerificationReport r = verify(p, maxFlags);
        if (r.pass) {
            ++pass;
            continue;
        }
        ++fail;
        std::cout << "[FAIL] " << to_json(make_record(p, false, false)) << "\n";
        std::cout << "  flags " << r.formulaFlags << " vs oracle " << r.oracleFlags << "; orbits "
                  << r.formulaOrbits << " vs " << r.oracleOrbits << "; identity component "
                  << r.formulaIdentityComponent << " vs " << r.oracleIdentityComponent << "\n";
        for (const auto& pc : r.predicates)
            if (!pc.ok())
                std::cout << "  predicate " << pc.name << ": formula " << pc.formula << " observed "
                          << pc.observed << "\n";
    }
    return fail == 0 ? 0 : 1;
}

int run_verify(const std::string& only, const GridBounds& bounds, long long maxFlags) {
    long long pass = 0, fail = 0, skipped = 0;

    if (only == "table2") {
        // one verdict per printed witness: the expected cell plus full oracle
        // agreement (the largest witness has 3840 flags, so widen the bound)
        long long bound = std::max(maxFlags, static_cast<long long>(4096));
        for (const auto& w : table2_witnesses()) {
            TwistoidParams p{validate(w.params)};
            std::string expect = w.row + "|" + w.column;
            auto rep = classify(p);
            bool ok = rep.familyId == expect && verify(p, bound).pass;
            std::cout << (ok ? "[PASS] " : "[FAIL] ") << expect << " <- p2=" << Rational(w.params.P2, 2)
                      << " p3=" << Rational(w.params.P3, 2) << " q3=" << Rational(w.params.Q3, 2);
            if (!ok) std::cout << " (classified " << rep.familyId << ")";
            std::cout << "\n";
            (ok ? pass : fail) += 1;
        }
    } else if (only == "petrie") {
        for (long long M = 1; M <= bounds.maxM; ++M) {
            GroupSpec g = build_group(TwistoidParams{TricosmParams{M, 1, 1}});
            bool ok = true;
            for (const Isometry& s : {g.generators[0], g.generators[1], g.derived}) {
                auto td = analyze_twist(s);
                long long m = petrie_m(*td);
                auto h = petrie_handedness(*td);
                auto expect = m % 3 == 0   ? PetrieHandedness::VertexAxis
                              : m % 3 == 1 ? PetrieHandedness::RightPetrie
                                           : PetrieHandedness::LeftPetrie;
                ok = ok && h == expect && m == M;
            }
            // exactly one rotation sense is lattice-preserving off the vertex axes
            auto td1 = analyze_twist(g.sigma1());
            int integralSenses = 0;
            for (const auto& rot : {SignedPerm::from_perm_signs({2, 0, 1}, {1, 1, 1}),
                                    SignedPerm::from_perm_signs({1, 2, 0}, {1, 1, 1})}) {
                Isometry cand{rot, td1->translationalComponent +
                                       (td1->axisPoint - rot.apply(td1->axisPoint))};
                if (preserves_tessellation(cand)) ++integralSenses;
            }
            ok = ok && integralSenses == (M % 3 == 0 ? 2 : 1);
            std::cout << (ok ? "[PASS]" : "[FAIL]") << " petrie m=" << M << " -> "
                      << to_string(petrie_handedness(*analyze_twist(g.sigma1()))) << "\n";
            (ok ? pass : fail) += 1;
        }
    } else {
        std::vector<std::string> manifolds;
        if (only.empty())
            manifolds = {"dicosm-axial", "dicosm-diagonal", "tricosm", "tetracosm"};
        else
            manifolds = {only};
        for (const auto& name : manifolds) {
            verify_grid(enumeration_grid(name, bounds), maxFlags, pass, fail, skipped);
            if (name == "dicosm-axial")
                std::cout << "note: dicosm-axial covers use t3 = sigma3*sigma1^-1 = "
                             "(2(p3-p1), 2q3, 0); doubling its q3 component would contradict "
                             "coverFlags = m * flags\n";
        }
    }

    std::cout << "verified " << (pass + fail) << " cases: " << pass << " pass, " << fail
              << " fail (" << skipped << " above flag bound)\n";
    return fail == 0 ? 0 : 1;
}

int run_table(const std::string& name, const std::string& outPath) {
    std::string csv;
    if (name == "table1")
        csv = table1_csv();
    else if (name == "table2")
        csv = table2_csv();
    else if (name == "families")
        csv = families_csv();
    else
        throw InvalidParameters("unknown table '" + name + "'");
    if (outPath.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(outPath, std::ios::binary);
        out << csv;
    }
    return 0;
}

int run_cover(const ParamInput& input, const std::string& format) {
    TwistoidParams p = input.build();
    OutputRecord rec = make_record(p, true, false);
    if (format == "json")
        std::cout << to_json(rec) << "\n";
    else
        std::cout << to_text(rec);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of cubic tessellations on the dicosm, tricosm and tetracosm"};
    app.require_subcommand(1);

    ParamInput classifyInput, coverInput;
    std::string classifyFormat = "text", coverFormat = "text", enumFormat = "json";
    bool withCover = false, withOracle = false, familiesOnly = false;
    long long maxFlags = kDefaultFlagBound;
    long long verifyMaxFlags = 2304;
    std::string enumManifold, verifyOnly, tableName, tableOut;
    GridBounds bounds;

    auto* cmdClassify = app.add_subcommand("classify", "classify one twistoid");
    classifyInput.register_options(cmdClassify);
    cmdClassify->add_option("--format", classifyFormat, "json|csv|text");
    cmdClassify->add_flag("--with-cover", withCover, "include the minimal toroidal cover");
    cmdClassify->add_flag("--with-oracle", withOracle, "run the brute-force verification");
    cmdClassify->add_option("--max-flags", maxFlags, "oracle flag bound");

    auto* cmdEnumerate = app.add_subcommand("enumerate", "list normalized parameter sets");
    cmdEnumerate->add_option("manifold", enumManifold, "manifold")->required();
    cmdEnumerate->add_option("--max-c", bounds.maxC, "bound on C");
    cmdEnumerate->add_option("--max-n", bounds.maxN, "bound on N");
    cmdEnumerate->add_option("--max-m", bounds.maxM, "bound on M");
    cmdEnumerate->add_option("--max-ab", bounds.maxAB, "bound on a,b");
    cmdEnumerate->add_option("--max-pq", bounds.maxPQ, "bound on P,Q");
    cmdEnumerate->add_option("--max-p2", bounds.maxP2, "bound on P2");
    cmdEnumerate->add_option("--max-q3", bounds.maxQ3, "bound on Q3");
    cmdEnumerate->add_flag("--families-only", familiesOnly, "one witness per realized family");
    cmdEnumerate->add_option("--format", enumFormat, "json|csv");

    auto* cmdVerify = app.add_subcommand("verify", "formula-vs-oracle verification over a grid");
    cmdVerify->add_option("--only", verifyOnly, "manifold, 'table2' or 'petrie'");
    cmdVerify->add_option("--max-flags", verifyMaxFlags, "oracle flag bound");
    cmdVerify->add_option("--max-c", bounds.maxC, "bound on C");
    cmdVerify->add_option("--max-n", bounds.maxN, "bound on N");
    cmdVerify->add_option("--max-m", bounds.maxM, "bound on M");
    cmdVerify->add_option("--max-ab", bounds.maxAB, "bound on a,b");
    cmdVerify->add_option("--max-pq", bounds.maxPQ, "bound on P,Q");
    cmdVerify->add_option("--max-p2", bounds.maxP2, "bound on P2");
    cmdVerify->add_option("--max-q3", bounds.maxQ3, "bound on Q3");

    auto* cmdTable = app.add_subcommand("table", "emit table1|table2|families as CSV");
    cmdTable->add_option("name", tableName, "table1|table2|families")->required();
    cmdTable->add_option("--out", tableOut, "output file (default stdout)");

    auto* cmdCover = app.add_subcommand("cover", "minimal toroidal cover of one twistoid");
    coverInput.register_options(cmdCover);
    cmdCover->add_option("--format", coverFormat, "json|text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmdClassify->parsed())
            return run_classify(classifyInput, classifyFormat, withCover, withOracle, maxFlags);
        if (cmdEnumerate->parsed()) return run_enumerate(enumManifold, bounds, familiesOnly, enumFormat);
        if (cmdVerify->parsed()) return run_verify(verifyOnly, bounds, verifyMaxFlags);
        if (cmdTable->parsed()) return run_table(tableName, tableOut);
        if (cmdCover->parsed()) return run_cover(coverInput, coverFormat);
    } catch (const HexacosmImpossible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ComplexityBound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
