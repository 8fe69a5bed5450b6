#include "twistoid/report.hpp"

#include <sstream>

#include <json.hpp>

#include "twistoid/twist.hpp"

namespace twistoid {

using json = nlohmann::json;

OutputRecord make_record(const TwistoidParams& params, bool withCover, bool withOracle,
                         long long flagBound) {
    TwistoidParams v = validate(params);
    OutputRecord r;
    r.classification = classify(v);
    if (withCover) {
        r.cover = cover_lattice(v);
        r.coverClass = cover_class(v);
    }
    if (withOracle) r.oracle = verify(v, flagBound);
    if (std::holds_alternative<TricosmParams>(v.value)) {
        GroupSpec g = build_group(v);
        auto td = analyze_twist(g.sigma1());
        r.petrieM = petrie_m(*td);
        r.petrieHandedness = to_string(petrie_handedness(*td));
    }
    return r;
}

namespace {

json params_json(const TwistoidParams& p) {
    json enc = json::object();
    static const char* axialKeys[] = {"C", "P1", "P2", "P3", "Q3"};
    static const char* diagKeys[] = {"N", "P1", "P2", "P3", "Q3"};
    static const char* triKeys[] = {"M", "a", "b"};
    static const char* tetraKeys[] = {"C", "P", "Q"};
    const char* const* keys = nullptr;
    switch (p.kind()) {
        case ManifoldKind::DicosmAxial: keys = axialKeys; break;
        case ManifoldKind::DicosmDiagonal: keys = diagKeys; break;
        case ManifoldKind::Tricosm: keys = triKeys; break;
        default: keys = tetraKeys; break;
    }
    auto vals = p.encoded();
    for (size_t i = 0; i < vals.size(); ++i) enc[keys[i]] = vals[i];

    json disp = json::object();
    for (const auto& [name, value] : p.display()) disp[name] = value.str();
    return json{{"encoded", enc}, {"display", disp}};
}

json ivec_json(const IVec3& v) { return json::array({v.x, v.y, v.z}); }

}  // namespace

std::string to_json(const OutputRecord& r) {
    const auto& c = r.classification;
    json j;
    j["manifold"] = to_string(c.kind);
    j["params"] = params_json(c.params);
    j["family"] = c.familyId;
    json rigid = json::array();
    for (const auto& t : c.profile.rigid) rigid.push_back(to_string(t));
    j["rigid"] = rigid;
    j["deformable"] = c.kind == ManifoldKind::DicosmAxial ? to_string(c.profile.deformable) : "";
    j["flags"] = c.flagCount;
    j["flagOrbits"] = c.flagOrbitCount;
    j["identityComponentOrder"] = c.identityComponentOrder;
    if (r.petrieM) {
        j["petrieM"] = *r.petrieM;
        j["petrie"] = *r.petrieHandedness;
    }
    if (r.cover) {
        j["cover"] = json{{"t1", ivec_json(r.cover->t1)},
                                  {"t2", ivec_json(r.cover->t2)},
                                  {"t3", ivec_json(r.cover->t3)},
                                  {"index", r.cover->index},
                                  {"class", to_string(*r.coverClass)}};
    }
    if (r.oracle) {
        j["oracle"] = json{{"flags", r.oracle->oracleFlags},
                                   {"orbits", r.oracle->oracleOrbits},
                                   {"pass", r.oracle->pass}};
    }
    return j.dump();
}

std::string to_csv_header() {
    return "manifold,params,family,flags,flagOrbits,identityComponentOrder,coverIndex,coverClass,"
           "oracleFlags,oracleOrbits,oraclePass";
}

std::string to_csv_row(const OutputRecord& r) {
    const auto& c = r.classification;
    std::ostringstream os;
    os << to_string(c.kind) << ",\"";
    bool first = true;
    for (const auto& [name, value] : c.params.display()) {
        if (!first) os << " ";
        first = false;
        os << name << "=" << value.str();
    }
    os << "\"," << '"' << c.familyId << '"' << "," << c.flagCount << "," << c.flagOrbitCount << ","
       << c.identityComponentOrder << ",";
    if (r.cover) os << r.cover->index;
    os << ",";
    if (r.coverClass) os << to_string(*r.coverClass);
    os << ",";
    if (r.oracle) os << r.oracle->oracleFlags;
    os << ",";
    if (r.oracle) os << r.oracle->oracleOrbits;
    os << ",";
    if (r.oracle) os << (r.oracle->pass ? "true" : "false");
    return os.str();
}

std::string to_text(const OutputRecord& r) {
    const auto& c = r.classification;
    std::ostringstream os;
    os << "manifold: " << to_string(c.kind) << "\n";
    os << "params:";
    for (const auto& [name, value] : c.params.display()) os << " " << name << "=" << value.str();
    os << "\n";
    os << "family: " << c.familyId << "\n";
    if (c.kind == ManifoldKind::DicosmAxial) {
        os << "rigid:";
        if (c.profile.rigid.empty()) os << " (only rho)";
        for (const auto& t : c.profile.rigid) os << " " << to_string(t);
        os << "\ndeformable: " << to_string(c.profile.deformable) << "\n";
    }
    if (r.petrieM) os << "petrie: m=" << *r.petrieM << " (" << *r.petrieHandedness << ")\n";
    os << "flags: " << c.flagCount << "\n";
    os << "flag-orbits: " << c.flagOrbitCount << "\n";
    os << "identity-component order: " << c.identityComponentOrder << "\n";
    if (r.cover) {
        os << "cover: t1=" << r.cover->t1 << " t2=" << r.cover->t2 << " t3=" << r.cover->t3
           << " index=" << r.cover->index << " class=" << to_string(*r.coverClass) << "\n";
    }
    if (r.oracle) {
        os << "oracle: flags=" << r.oracle->oracleFlags << " orbits=" << r.oracle->oracleOrbits
           << " pass=" << (r.oracle->pass ? "true" : "false") << "\n";
    }
    return os.str();
}

TwistoidParams params_from_json(const std::string& json) {
    auto j = json::parse(json);
    std::string manifold = j.at("manifold");
    const auto& enc = j.at("params").at("encoded");
    auto get = [&](const char* key) { return enc.at(key).get<long long>(); };
    TwistoidParams p;
    if (manifold == "dicosm-axial")
        p.value = DicosmAxialParams{get("C"), get("P1"), get("P2"), get("P3"), get("Q3")};
    else if (manifold == "dicosm-diagonal")
        p.value = DicosmDiagonalParams{get("N"), get("P1"), get("P2"), get("P3"), get("Q3")};
    else if (manifold == "tricosm")
        p.value = TricosmParams{get("M"), get("a"), get("b")};
    else if (manifold == "tetracosm")
        p.value = TetracosmParams{get("C"), get("P"), get("Q")};
    else
        throw std::invalid_argument("unknown manifold: " + manifold);
    return p;
}

std::string table1_csv() {
    std::ostringstream os;
    os << "type,period,V,E,S,C,direction,norm\n";
    const auto& reps = canonical_twist_representatives();
    for (const auto& row : twist_type_table()) {
        // regenerate the row from the canonical representative
        const Isometry& g = reps[static_cast<size_t>(row.type)].second;
        auto td = analyze_twist(g);
        auto type = classify_twist_type(*td);
        if (!type || *type != row.type)
            throw std::logic_error("twist table representative does not classify to its row");
        auto marks = axis_centroid_classes(*td);
        auto mark = [&](CentroidClass cc) { return marks.count(cc) ? "x" : ""; };
        os << to_string(row.type) << "," << td->rotationOrder << "," << mark(CentroidClass::Vertex)
           << "," << mark(CentroidClass::Edge) << "," << mark(CentroidClass::Square) << ","
           << mark(CentroidClass::Cube) << "," << row.direction << "," << row.norm << "\n";
    }
    return os.str();
}

std::string table2_csv() {
    static const char* rows[] = {"rho", "rho,alpha", "rho,beta", "rho,alphabeta", "rho,alpha,beta"};
    static const char* cols[] = {"1", "2", "2_{0,2}", "2_1", "4"};
    auto witnesses = table2_witnesses();
    std::ostringstream os;
    os << "rigid\\deformable,1,2,\"2_{0,2}\",2_1,4\n";
    for (const char* row : rows) {
        os << '"' << row << '"';
        for (const char* col : cols) {
            os << ",";
            bool found = false;
            for (const auto& w : witnesses) {
                if (w.row != row || w.column != col) continue;
                auto rep = classify(TwistoidParams{validate(w.params)});
                std::string expect = std::string(row) + "|" + col;
                if (rep.familyId != expect)
                    throw std::logic_error("table witness classifies into " + rep.familyId +
                                           " instead of " + expect);
                os << "\"p2=" << Rational(w.params.P2, 2).str() << " p3=" << Rational(w.params.P3, 2).str()
                   << " q3=" << Rational(w.params.Q3, 2).str() << "\"";
                found = true;
                break;
            }
            if (!found) os << "None";
        }
        os << "\n";
    }
    return os.str();
}

std::string families_csv() {
    std::ostringstream os;
    os << "manifold,family,orbitFormula\n";
    for (const auto& w : table2_witnesses())
        os << "dicosm-axial,\"" << w.row << "|" << w.column << "\",\"12*Q3*(P2-P1)/(r*n)\"\n";
    os << "dicosm-diagonal,beta&chi,\"(3/2)*Q3*(P2-P1)\"\n";
    os << "dicosm-diagonal,chi,\"3*Q3*(P2-P1)\"\n";
    os << "dicosm-diagonal,beta,\"3*Q3*(P2-P1)\"\n";
    os << "dicosm-diagonal,none,\"6*Q3*(P2-P1)\"\n";
    os << "tricosm,chi,\"8*(a^2+b^2+ab)\"\n";
    os << "tricosm,zeta,\"8*(a^2+b^2+ab)\"\n";
    os << "tricosm,none,\"16*(a^2+b^2+ab)\"\n";
    os << "tetracosm,alpha&chi,\"3*(P^2+Q^2)\"\n";
    os << "tetracosm,alpha,\"6*(P^2+Q^2)\"\n";
    os << "tetracosm,chi,\"6*(P^2+Q^2)\"\n";
    os << "tetracosm,none,\"12*(P^2+Q^2)\"\n";
    return os.str();
}

}  // namespace twistoid
