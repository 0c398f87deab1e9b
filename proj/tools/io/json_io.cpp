#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace wdlab::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& path)
{
    if (!j.is_object())
        throw SchemaError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw SchemaError(path + "." + key, "missing field");
    return *it;
}

template <class T>
T get(const Json& j, const std::string& path)
{
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(path, "wrong type (" + std::string(j.type_name()) + ")");
    }
}

const Json& array(const Json& j, const std::string& path)
{
    if (!j.is_array())
        throw SchemaError(path, "expected an array");
    return j;
}

int key_int(const std::string& key, const std::string& path)
{
    try {
        std::size_t used = 0;
        int n = std::stoi(key, &used);
        if (used == key.size())
            return n;
    } catch (const std::exception&) {
    }
    throw SchemaError(path, "key '" + key + "' is not an integer");
}

Rational rational(const Json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw SchemaError(path, e.what());
        }
    }
    throw SchemaError(path, "expected a rational as integer or \"p/r\" string");
}

HalfInt half_int(const Json& j, const std::string& path)
{
    if (j.is_number_integer())
        return HalfInt::integer(j.get<long>());
    try {
        return HalfInt::parse(get<std::string>(j, path));
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
}

std::string parabolic_name(Parabolic p)
{
    return to_string(p);
}

Parabolic parabolic_from(const Json& j, const std::string& path)
{
    auto s = get<std::string>(j, path);
    if (s == to_string(Parabolic::B))
        return Parabolic::B;
    if (s == to_string(Parabolic::Bbar))
        return Parabolic::Bbar;
    throw SchemaError(path, "unknown parabolic '" + s + "'");
}

StdRep rep_from(const Json& j, const std::string& path)
{
    auto s = get<std::string>(j, path);
    if (s == to_string(StdRep::Std))
        return StdRep::Std;
    if (s == to_string(StdRep::Dual))
        return StdRep::Dual;
    throw SchemaError(path, "unknown representation '" + s + "'");
}

Json torus_json(const TorusDatum& d)
{
    return Json{{"first", to_json(d.first)}, {"second", to_json(d.second)}};
}

TorusDatum torus_from(const Json& j, const std::string& path)
{
    return {character_from_json(field(j, "first", path), path + ".first"),
            character_from_json(field(j, "second", path), path + ".second")};
}

Json eis_json(const EisEntry& e)
{
    return Json{{"kind", "eis"},
                {"parabolic", parabolic_name(e.parabolic)},
                {"datum", torus_json(e.datum)},
                {"degree", e.degree}};
}

EisEntry eis_from(const Json& j, const std::string& path)
{
    return {parabolic_from(field(j, "parabolic", path), path + ".parabolic"),
            torus_from(field(j, "datum", path), path + ".datum"),
            get<int>(field(j, "degree", path), path + ".degree")};
}

SpecEis spec_eis_from(const Json& j, std::int64_t q, const std::string& path)
{
    return {parabolic_from(field(j, "parabolic", path), path + ".parabolic"),
            scalar_from_json(field(j, "point", path), q, path + ".point"),
            get<int>(field(j, "degree", path), path + ".degree")};
}

}  // namespace

Json to_json(const Scalar& s)
{
    return Json{{"a", rational_to_string(s.a())}, {"b", rational_to_string(s.b())}};
}

Json to_json(const LaurentPoly& f)
{
    Json terms = Json::array();
    for (auto& [e, c] : f.terms())
        terms.push_back(Json::array({e, to_json(c)}));
    return Json{{"terms", terms}};
}

Json to_json(const PolyMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const FgModule& m)
{
    Json torsion = Json::array();
    for (auto& f : m.torsion())
        torsion.push_back(to_json(f));
    return Json{{"free", m.free_rank()}, {"torsion", torsion}};
}

Json to_json(const GradedCohomology& h)
{
    Json out = Json::object();
    for (auto& [d, m] : h)
        out[std::to_string(d)] = to_json(m);
    return out;
}

Json to_json(const Complex& c)
{
    Json terms = Json::object(), diffs = Json::object();
    for (auto& [d, r] : c.ranks())
        terms[std::to_string(d)] = r;
    for (auto& [d, r] : c.ranks())
        if (c.ranks().count(d + 1))
            diffs[std::to_string(d)] = to_json(c.diff(d));
    return Json{{"base", to_string(c.base())}, {"terms", terms}, {"diffs", diffs}};
}

Json to_json(const WDRep& rep)
{
    Json j{{"schema", kSchema},
           {"base", to_string(rep.base)},
           {"q", rep.q},
           {"dim", rep.dim()},
           {"frobenius", to_json(rep.frobenius)},
           {"nilpotent", to_json(rep.nilpotent)}};
    if (rep.inertia)
        j["inertia"] = Json{{"order", rep.inertia->order}, {"generator", to_json(rep.inertia->generator)}};
    else
        j["inertia"] = "trivial";
    return j;
}

Json to_json(const HVector& h)
{
    Json out = Json::array();
    for (auto& m : h)
        out.push_back(to_json(m));
    return out;
}

Json to_json(const SmoothCharacter& chi)
{
    const char* kind = chi.kind == SmoothCharacter::Kind::Norm  ? "norm"
                       : chi.kind == SmoothCharacter::Kind::CcF ? "ccf"
                                                                : "ccfx";
    return Json{{"kind", kind}, {"exponent", chi.exponent.to_string()}};
}

Json to_json(const PeriodEntry& e)
{
    return std::visit(
        [](const auto& v) -> Json {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, CharEntry>)
                return Json{{"kind", "char"}, {"chi", to_json(v.chi)}, {"degree", v.degree}};
            else if constexpr (std::is_same_v<V, TorusEntry>)
                return Json{{"kind", "torus"}, {"datum", torus_json(v.datum)}, {"degree", v.degree}};
            else if constexpr (std::is_same_v<V, EisEntry>)
                return eis_json(v);
            else if constexpr (std::is_same_v<V, FiberEntry>)
                return Json{{"kind", "fiber"}, {"sub", v.sub}, {"quotient", eis_json(v.quotient)}};
            else
                return Json{{"kind", "opaque"}, {"name", v.name}, {"degree", v.degree}};
        },
        e);
}

Json to_json(const PeriodTable& t)
{
    Json comps = Json::object();
    for (auto& [n, e] : t.components)
        comps[std::to_string(n)] = to_json(e);
    return Json{{"label", t.label},
                {"normalized", t.normalized},
                {"q", t.q},
                {"n_max", t.n_max},
                {"components", comps}};
}

Json to_json(const GradedTable& t)
{
    Json weights = Json::object();
    for (auto& [n, entries] : t.weights) {
        Json list = Json::array();
        for (auto& e : entries)
            list.push_back(Json{{"module", to_json(e.module)}, {"degree", e.degree}});
        weights[std::to_string(n)] = list;
    }
    return Json{{"component", t.component},
                {"normalized", t.normalized},
                {"rep", to_string(t.rep)},
                {"q", t.q},
                {"n_max", t.n_max},
                {"weights", weights}};
}

Json to_json(const SpecEis& e)
{
    return Json{{"kind", "eis"},
                {"parabolic", parabolic_name(e.parabolic)},
                {"point", to_json(e.point)},
                {"degree", e.degree}};
}

Json to_json(const HeckeLTable& t)
{
    Json rows = Json::object();
    for (auto& [n, row] : t.rows) {
        Json token;
        if (auto* e = std::get_if<SpecEis>(&row.token)) {
            token = to_json(*e);
        } else {
            auto& f = std::get<SpecFiber>(row.token);
            token = Json{{"kind", "fiber"}, {"sub", f.sub}, {"quotient", to_json(f.quotient)}};
            if (f.sym_piece)
                token["sym_piece"] = to_json(*f.sym_piece);
        }
        rows[std::to_string(n)] = Json{{"token", token}, {"via_fe", row.via_fe}};
    }
    return Json{{"q", t.q}, {"normalized", t.normalized}, {"n_max", t.n_max}, {"rows", rows}};
}

Json to_json(const Report& r)
{
    Json per = Json::object();
    for (auto& [k, v] : r.per_component)
        per[std::to_string(k)] = v;
    return Json{{"per_component", per}, {"overall", r.overall}};
}

Json to_json(const CurveData& c)
{
    Json j{{"schema", kSchema}, {"genus", c.genus}, {"twist_order", c.twist_order}};
    if (c.projective_line) {
        j["projective_line"] = true;
        return j;
    }
    Json h0 = Json::array();
    for (auto& [l, h] : c.h0)
        h0.push_back(Json{{"degree", l.degree}, {"twist", l.twist}, {"h0", h}});
    j["h0"] = h0;
    return j;
}

Json to_json(const ZetaSeries& z)
{
    Json c = Json::array(), f = Json::array();
    for (auto& x : z.coefficients)
        c.push_back(x.get_str());
    for (auto& x : z.closed_form)
        f.push_back(x.get_str());
    return Json{{"q", z.q}, {"order", z.order}, {"coefficients", c}, {"closed_form", f}, {"matches", z.matches()}};
}

Json to_json(const FiniteGroup& g)
{
    return Json{{"order", g.order()}, {"table", g.table()}};
}

Scalar scalar_from_json(const Json& j, std::int64_t q, const std::string& path)
{
    if (!j.is_object())
        return Scalar(rational(j, path));
    Rational a = rational(field(j, "a", path), path + ".a");
    Rational b = j.contains("b") ? rational(j["b"], path + ".b") : Rational(0);
    if (sgn(b) == 0)
        return Scalar(a);
    try {
        return FieldCtx(q).scalar(a, b);
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
}

LaurentPoly poly_from_json(const Json& j, std::int64_t q, const std::string& path)
{
    if (!j.is_object() || !j.contains("terms"))
        return LaurentPoly(scalar_from_json(j, q, path));
    const Json& terms = array(j["terms"], path + ".terms");
    LaurentPoly f;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string p = path + ".terms[" + std::to_string(i) + "]";
        if (!terms[i].is_array() || terms[i].size() != 2)
            throw SchemaError(p, "expected [exponent, scalar]");
        f += LaurentPoly::monomial(scalar_from_json(terms[i][1], q, p + "[1]"), get<int>(terms[i][0], p + "[0]"));
    }
    return f;
}

PolyMatrix matrix_from_json(const Json& j, std::int64_t q, const std::string& path)
{
    array(j, path);
    std::size_t rows = j.size(), cols = rows ? array(j[0], path + "[0]").size() : 0;
    PolyMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string p = path + "[" + std::to_string(r) + "]";
        if (array(j[r], p).size() != cols)
            throw SchemaError(p, "row length " + std::to_string(j[r].size()) + ", expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = poly_from_json(j[r][c], q, p + "[" + std::to_string(c) + "]");
    }
    return m;
}

FgModule module_from_json(const Json& j, std::int64_t q, const std::string& path)
{
    auto free = get<std::size_t>(field(j, "free", path), path + ".free");
    std::vector<LaurentPoly> torsion;
    if (j.contains("torsion")) {
        const Json& t = array(j["torsion"], path + ".torsion");
        for (std::size_t i = 0; i < t.size(); ++i)
            torsion.push_back(poly_from_json(t[i], q, path + ".torsion[" + std::to_string(i) + "]"));
    }
    return FgModule(free, torsion);
}

GradedCohomology cohomology_from_json(const Json& j, std::int64_t q, const std::string& path)
{
    GradedCohomology h;
    for (auto& [k, v] : j.items())
        h[key_int(k, path)] = module_from_json(v, q, path + "." + k);
    return h;
}

Complex complex_from_json(const Json& j, std::int64_t q, const std::string& path)
{
    Base base;
    try {
        base = parse_base(get<std::string>(field(j, "base", path), path + ".base"));
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaError(path + ".base", e.what());
    }
    std::map<int, std::size_t> ranks;
    for (auto& [k, v] : field(j, "terms", path).items())
        ranks[key_int(k, path + ".terms")] = get<std::size_t>(v, path + ".terms." + k);
    std::map<int, PolyMatrix> diffs;
    if (j.contains("diffs"))
        for (auto& [k, v] : j["diffs"].items())
            diffs[key_int(k, path + ".diffs")] = matrix_from_json(v, q, path + ".diffs." + k);
    try {
        return Complex(base, ranks, diffs);
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
}

WDRep wdrep_from_json(const Json& j, std::int64_t default_q, const std::string& path)
{
    WDRep rep;
    rep.q = j.contains("q") ? get<std::int64_t>(j["q"], path + ".q") : default_q;
    try {
        make_field(rep.q);
    } catch (const std::exception& e) {
        throw SchemaError(path + ".q", e.what());
    }
    try {
        rep.base = parse_base(get<std::string>(field(j, "base", path), path + ".base"));
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaError(path + ".base", e.what());
    }
    rep.frobenius = matrix_from_json(field(j, "frobenius", path), rep.q, path + ".frobenius");
    rep.nilpotent = matrix_from_json(field(j, "nilpotent", path), rep.q, path + ".nilpotent");
    if (j.contains("dim")) {
        auto d = get<std::size_t>(j["dim"], path + ".dim");
        if (d != rep.frobenius.rows())
            throw SchemaError(path + ".dim", "dim " + std::to_string(d) + " but frobenius is " + rep.frobenius.shape());
    }
    if (j.contains("inertia") && !(j["inertia"].is_string() && j["inertia"] == "trivial")) {
        const Json& in = j["inertia"];
        Inertia inertia;
        inertia.order = get<int>(field(in, "order", path + ".inertia"), path + ".inertia.order");
        inertia.generator = matrix_from_json(field(in, "generator", path + ".inertia"), rep.q, path + ".inertia.generator");
        rep.inertia = inertia;
    }
    try {
        rep.validate();
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
    return rep;
}

SmoothCharacter character_from_json(const Json& j, const std::string& path)
{
    auto kind = get<std::string>(field(j, "kind", path), path + ".kind");
    HalfInt e = half_int(field(j, "exponent", path), path + ".exponent");
    if (kind == "norm")
        return SmoothCharacter::norm(e);
    if (kind == "ccf")
        return SmoothCharacter::ccf(e);
    if (kind == "ccfx")
        return SmoothCharacter::ccfx(e);
    throw SchemaError(path + ".kind", "unknown character kind '" + kind + "'");
}

PeriodEntry period_entry_from_json(const Json& j, const std::string& path)
{
    auto kind = get<std::string>(field(j, "kind", path), path + ".kind");
    auto degree = [&] { return get<int>(field(j, "degree", path), path + ".degree"); };
    if (kind == "char")
        return CharEntry{character_from_json(field(j, "chi", path), path + ".chi"), degree()};
    if (kind == "torus")
        return TorusEntry{torus_from(field(j, "datum", path), path + ".datum"), degree()};
    if (kind == "eis")
        return eis_from(j, path);
    if (kind == "fiber")
        return FiberEntry{get<std::string>(field(j, "sub", path), path + ".sub"),
                          eis_from(field(j, "quotient", path), path + ".quotient")};
    if (kind == "opaque")
        return OpaqueEntry{get<std::string>(field(j, "name", path), path + ".name"), degree()};
    throw SchemaError(path + ".kind", "unknown entry kind '" + kind + "'");
}

PeriodTable period_table_from_json(const Json& j, const std::string& path)
{
    PeriodTable t;
    t.label = get<std::string>(field(j, "label", path), path + ".label");
    t.normalized = get<bool>(field(j, "normalized", path), path + ".normalized");
    t.q = get<std::int64_t>(field(j, "q", path), path + ".q");
    t.n_max = get<int>(field(j, "n_max", path), path + ".n_max");
    for (auto& [k, v] : field(j, "components", path).items())
        t.components[key_int(k, path + ".components")] = period_entry_from_json(v, path + ".components." + k);
    return t;
}

GradedTable graded_table_from_json(const Json& j, const std::string& path)
{
    GradedTable t;
    t.component = get<std::string>(field(j, "component", path), path + ".component");
    t.normalized = get<bool>(field(j, "normalized", path), path + ".normalized");
    if (j.contains("rep"))
        t.rep = rep_from(j["rep"], path + ".rep");
    t.q = get<std::int64_t>(field(j, "q", path), path + ".q");
    t.n_max = get<int>(field(j, "n_max", path), path + ".n_max");
    for (auto& [k, v] : field(j, "weights", path).items()) {
        std::string p = path + ".weights." + k;
        auto& list = t.weights[key_int(k, path + ".weights")];
        array(v, p);
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::string pi = p + "[" + std::to_string(i) + "]";
            list.push_back({module_from_json(field(v[i], "module", pi), t.q, pi + ".module"),
                            get<int>(field(v[i], "degree", pi), pi + ".degree")});
        }
    }
    return t;
}

HeckeLTable hecke_table_from_json(const Json& j, const std::string& path)
{
    HeckeLTable t;
    t.q = get<std::int64_t>(field(j, "q", path), path + ".q");
    t.normalized = get<bool>(field(j, "normalized", path), path + ".normalized");
    t.n_max = get<int>(field(j, "n_max", path), path + ".n_max");
    for (auto& [k, v] : field(j, "rows", path).items()) {
        std::string p = path + ".rows." + k;
        const Json& tok = field(v, "token", p);
        HeckeLRow row;
        row.via_fe = get<bool>(field(v, "via_fe", p), p + ".via_fe");
        auto kind = get<std::string>(field(tok, "kind", p + ".token"), p + ".token.kind");
        if (kind == "eis") {
            row.token = spec_eis_from(tok, t.q, p + ".token");
        } else if (kind == "fiber") {
            SpecFiber f{get<std::string>(field(tok, "sub", p + ".token"), p + ".token.sub"), std::nullopt,
                        spec_eis_from(field(tok, "quotient", p + ".token"), t.q, p + ".token.quotient")};
            if (tok.contains("sym_piece"))
                f.sym_piece = cohomology_from_json(tok["sym_piece"], t.q, p + ".token.sym_piece");
            row.token = f;
        } else {
            throw SchemaError(p + ".token.kind", "unknown token kind '" + kind + "'");
        }
        t.rows[key_int(k, path + ".rows")] = row;
    }
    return t;
}

Report report_from_json(const Json& j, const std::string& path)
{
    Report r;
    for (auto& [k, v] : field(j, "per_component", path).items())
        r.per_component[key_int(k, path + ".per_component")] = get<std::string>(v, path + ".per_component." + k);
    r.overall = get<bool>(field(j, "overall", path), path + ".overall");
    return r;
}

CurveData curve_from_json(const Json& j, const std::string& path)
{
    if (j.contains("projective_line") && get<bool>(j["projective_line"], path + ".projective_line"))
        return CurveData::p1();
    CurveData c;
    c.genus = get<int>(field(j, "genus", path), path + ".genus");
    c.twist_order = j.contains("twist_order") ? get<int>(j["twist_order"], path + ".twist_order") : 1;
    if (c.genus < 0)
        throw SchemaError(path + ".genus", "must be >= 0");
    if (c.twist_order < 1)
        throw SchemaError(path + ".twist_order", "must be >= 1");
    const Json& h0 = array(field(j, "h0", path), path + ".h0");
    for (std::size_t i = 0; i < h0.size(); ++i) {
        std::string p = path + ".h0[" + std::to_string(i) + "]";
        BundleLabel l{get<int>(field(h0[i], "degree", p), p + ".degree"),
                      h0[i].contains("twist") ? get<int>(h0[i]["twist"], p + ".twist") : 0};
        if (l.twist < 0 || l.twist >= c.twist_order)
            throw SchemaError(p + ".twist", "outside [0, twist_order)");
        long h = get<long>(field(h0[i], "h0", p), p + ".h0");
        if (h < 0)
            throw SchemaError(p + ".h0", "must be >= 0");
        c.h0[l] = h;
    }
    return c;
}

FiniteGroup group_from_json(const Json& j, const std::string& path)
{
    auto order = get<std::size_t>(field(j, "order", path), path + ".order");
    auto table = get<std::vector<std::vector<std::size_t>>>(field(j, "table", path), path + ".table");
    if (table.size() != order)
        throw SchemaError(path + ".table", "has " + std::to_string(table.size()) + " rows for order " +
                                               std::to_string(order));
    try {
        return FiniteGroup::from_table(std::move(table));
    } catch (const std::exception& e) {
        throw SchemaError(path + ".table", e.what());
    }
}

CharacterTable character_table_from_json(const FiniteGroup& g, const Json& j, const std::string& path)
{
    CharacterTable ct;
    const Json& rows = array(j.is_object() ? field(j, "values", path) : j, path);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::string p = path + "[" + std::to_string(r) + "]";
        std::vector<Rational> row;
        for (std::size_t c = 0; c < array(rows[r], p).size(); ++c)
            row.push_back(rational(rows[r][c], p + "[" + std::to_string(c) + "]"));
        ct.values.push_back(row);
        ct.names.push_back(j.is_object() && j.contains("names") ? j["names"].at(r).get<std::string>()
                                                                 : "rho" + std::to_string(r));
    }
    try {
        validate_character_table(g, ct);
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
    return ct;
}

Json parse(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("$", e.what());
    }
}

Json load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

}  // namespace wdlab::io
