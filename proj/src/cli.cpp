#include "crossbi/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace crossbi::cli {

using json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- context

// Maps names back to the line of their first quoted occurrence so that
// semantic errors can carry file/line context.
class Locator {
  public:
    Locator(std::string source, const std::string &text) : source_(std::move(source)), text_(&text) {}

    std::string at(const std::string &key) const {
        std::size_t line = 0;
        if (text_) {
            const auto pos = text_->find("\"" + key + "\"");
            if (pos != std::string::npos)
                line = 1 + std::count(text_->begin(), text_->begin() + static_cast<std::ptrdiff_t>(pos), '\n');
        }
        return source_ + (line ? ":" + std::to_string(line) : std::string()) + ": ";
    }
    std::string line_of_byte(std::size_t byte) const {
        std::size_t line = 1;
        if (text_)
            line += std::count(text_->begin(),
                               text_->begin() + static_cast<std::ptrdiff_t>(std::min(byte, text_->size())), '\n');
        return source_ + ":" + std::to_string(line) + ": ";
    }

  private:
    std::string source_;
    const std::string *text_;
};

Shape to_shape(const json &j, const Locator &loc, const std::string &key) {
    if (!j.is_array())
        throw ParseError(loc.at(key) + "'" + key + "' shape must be an array of dimensions");
    std::vector<std::size_t> f;
    for (const auto &x : j) {
        if (!x.is_number_unsigned() || x.get<std::size_t>() == 0)
            throw ParseError(loc.at(key) + "'" + key + "' dimensions must be positive integers");
        f.push_back(x.get<std::size_t>());
    }
    return Shape(std::move(f));
}

Scalar to_scalar(const FieldSpec &f, const json &j, const Locator &loc, const std::string &key) {
    try {
        if (j.is_string())
            return f.parse(j.get<std::string>());
        if (j.is_number_integer())
            return f.from_int(j.get<long>());
    } catch (const std::exception &e) {
        throw ParseError(loc.at(key) + "'" + key + "': " + e.what());
    }
    throw ParseError(loc.at(key) + "'" + key + "': scalars must be strings such as \"3/7\"");
}

json scalar_json(const Scalar &s) { return s.to_string(); }

json vec_json(const Vec &v) {
    json a = json::array();
    for (const auto &s : v)
        a.push_back(scalar_json(s));
    return a;
}

json shape_json(const Shape &s) {
    json a = json::array();
    for (auto d : s.factors)
        a.push_back(d);
    return a;
}

FieldSpec parse_field_json(const json &j, const Locator &loc) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError(loc.at("field") + "field must be {\"kind\": \"Q\"} or {\"kind\": \"Fp\", \"p\": <prime>}");
    const auto kind = j["kind"].get<std::string>();
    if (kind == "Q")
        return FieldSpec::rationals();
    if (kind == "Fp") {
        if (!j.contains("p") || !j["p"].is_number_unsigned())
            throw ParseError(loc.at("field") + "Fp field needs an integer \"p\"");
        try {
            return FieldSpec::prime(j["p"].get<std::uint32_t>());
        } catch (const std::exception &e) {
            throw ParseError(loc.at("field") + e.what());
        }
    }
    throw ParseError(loc.at("field") + "unknown field kind '" + kind + "'");
}

json field_json(const FieldSpec &f) {
    json j;
    if (f.is_rational()) {
        j["kind"] = "Q";
    } else {
        j["kind"] = "Fp";
        j["p"] = f.characteristic();
    }
    return j;
}

// "Q", "F5", "Fp5".
FieldSpec parse_field_flag(const std::string &s) {
    if (s == "Q" || s == "q")
        return FieldSpec::rationals();
    std::string digits;
    if (s.rfind("Fp", 0) == 0)
        digits = s.substr(2);
    else if (!s.empty() && (s[0] == 'F' || s[0] == 'f'))
        digits = s.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("--field: expected Q or F<p>, got '" + s + "'");
    try {
        return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(digits)));
    } catch (const std::exception &e) {
        throw ParseError("--field: " + std::string(e.what()));
    }
}

// ---------------------------------------------------------------- resolve

const StructureEntry &structure(const Bundle &b, const std::string &name) {
    auto it = b.structures.find(name);
    if (it == b.structures.end())
        throw UnknownName("unknown structure '" + name + "'");
    return it->second;
}

const std::string &ref(const StructureEntry &s, const std::string &structure_name, const std::string &field) {
    auto it = s.refs.find(field);
    if (it == s.refs.end())
        throw ParseError("structure '" + structure_name + "' (" + s.type + ") is missing '" + field + "'");
    return it->second;
}

const LinMap &map_ref(const Bundle &b, const StructureEntry &s, const std::string &sname, const std::string &field) {
    const auto &name = ref(s, sname, field);
    auto it = b.maps.find(name);
    if (it == b.maps.end())
        throw UnknownName("structure '" + sname + "': unknown map '" + name + "'");
    return it->second;
}

const SpaceEntry &space_ref(const Bundle &b, const StructureEntry &s, const std::string &sname,
                            const std::string &field) {
    const auto &name = ref(s, sname, field);
    auto it = b.spaces.find(name);
    if (it == b.spaces.end())
        throw UnknownName("structure '" + sname + "': unknown space '" + name + "'");
    return it->second;
}

PointedSpace pointed_ref(const Bundle &b, const StructureEntry &s, const std::string &sname,
                         const std::string &field, PointedSpace::Kind kind) {
    const auto &sp = space_ref(b, s, sname, field);
    if (!sp.point)
        throw ParseError("structure '" + sname + "': space '" + ref(s, sname, field) + "' needs a point");
    return kind == PointedSpace::Kind::Element ? PointedSpace::element(b.field, *sp.point)
                                               : PointedSpace::functional(b.field, *sp.point);
}

void require_type(const StructureEntry &s, const std::string &name, std::initializer_list<const char *> types) {
    for (const char *t : types)
        if (s.type == t)
            return;
    std::string want;
    for (const char *t : types)
        want += (want.empty() ? "" : " or ") + std::string(t);
    throw ParseError("structure '" + name + "' has type '" + s.type + "', expected " + want);
}

bool is_standard_base(const StructureEntry &s) { return s.refs.count("A") && s.refs.count("C"); }

// ---------------------------------------------------------------- writing

void put_map(Bundle &b, const std::string &name, const LinMap &m) { b.maps[name] = m; }

void put_space(Bundle &b, const std::string &name, std::size_t dim, std::optional<Vec> point = {}) {
    b.spaces[name] = SpaceEntry{dim, std::move(point)};
}

void put_pointed(Bundle &b, const std::string &name, const PointedSpace &p) { put_space(b, name, p.dim, p.point); }

// ---------------------------------------------------------------- reports

int emit(const std::string &command, const CheckReport &r, bool as_json, bool verbose, std::ostream &out) {
    if (as_json) {
        out << report_json(command, r, verbose) << "\n";
    } else {
        out << r.to_text(verbose);
        std::size_t failed = 0;
        for (const auto &x : r.results())
            failed += x.ok() ? 0 : 1;
        out << (r.ok() ? "OK" : "FAILED") << ": " << r.results().size() - failed << "/" << r.results().size()
            << " identities hold\n";
    }
    return r.ok() ? 0 : 1;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path + ": cannot read file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream o(path, std::ios::binary);
    if (!o)
        throw ParseError(path + ": cannot write file");
    o << text;
}

struct Loaded {
    Bundle bundle;
    std::string text;
    std::string path;
};

Loaded load(const std::string &path) {
    Loaded l;
    l.path = path;
    l.text = read_file(path);
    l.bundle = parse_bundle(l.text, path);
    return l;
}

// Semantic errors from the resolvers carry no position; add the file and the
// line of the name they mention (the unresolved one for UnknownName, which the
// message quotes last; otherwise the first).
template <class F> auto with_context(const Loaded &l, F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error &e) {
        const std::string msg = e.what();
        if (msg.rfind(l.path, 0) == 0)
            throw;
        std::vector<std::string> quoted;
        for (auto q = msg.find('\''); q != std::string::npos; q = msg.find('\'', q + 1)) {
            const auto q2 = msg.find('\'', q + 1);
            if (q2 == std::string::npos)
                break;
            quoted.push_back(msg.substr(q + 1, q2 - q - 1));
            q = q2;
        }
        std::string key;
        if (!quoted.empty())
            key = dynamic_cast<const UnknownName *>(&e) ? quoted.back() : quoted.front();
        const std::string where = Locator(l.path, l.text).at(key);
        if (dynamic_cast<const UnknownName *>(&e))
            throw UnknownName(where + msg);
        if (dynamic_cast<const ShapeMismatch *>(&e))
            throw ShapeMismatch(where + msg);
        if (dynamic_cast<const FieldMismatch *>(&e))
            throw FieldMismatch(where + msg);
        if (dynamic_cast<const ParseError *>(&e))
            throw ParseError(where + msg);
        throw;
    }
}

void check_field_flag(const Bundle &b, const std::optional<std::string> &flag) {
    if (flag && !(parse_field_flag(*flag) == b.field))
        throw FieldMismatch("--field " + *flag + " does not match the bundle field " + b.field.name());
}

std::string first_of_type(const Bundle &b, const std::string &type) {
    for (const auto &[n, s] : b.structures)
        if (s.type == type)
            return n;
    throw UnknownName("no structure of type '" + type + "'");
}

TwistPair load_pair(const std::string &source, const Bundle &base, const CrossedData &d) {
    if (source == "identity")
        return identity_pair(d.A, d.V.dim);
    const Loaded l = load(source);
    if (!(l.bundle.field == base.field))
        throw FieldMismatch(source + ": pair field " + l.bundle.field.name() + " differs from " + base.field.name());
    return with_context(l, [&] { return get_twist_pair(l.bundle, first_of_type(l.bundle, "twist_pair")); });
}

// The tensor product algebra k[Z_n] (x) k[Z_v] as a crossed product, twisted
// by a random diagonal theta(e_j) = a_j (x) e_j with a_0 = 1 and each a_j a
// unit of k[Z_n]; gamma comes from the linear solver.
CheckReport random_twist_demo(FieldSpec f, std::uint64_t seed, std::size_t n, std::size_t v) {
    std::mt19937_64 rng(seed);
    const std::uint32_t p = f.is_rational() ? 7 : f.characteristic();
    auto rnd = [&] { return f.from_int(static_cast<long>(rng() % p) - static_cast<long>(p / 2)); };
    const auto A = group_algebra(n, f).bia.alg;
    const auto Vh = group_algebra(v, f).bia.alg;
    const CrossedData d = as_crossed(TwistingMapData{A, Vh, swap(f, v, n)});
    CheckReport rep;
    rep.merge(build_crossed_product(d).report, "base.");
    LinMap theta;
    GammaSolution g;
    for (int attempt = 0; attempt < 64 && g.kind != GammaSolution::Kind::Unique; ++attempt) {
        theta = LinMap(f, Shape{v}, Shape{n, v});
        theta.at(0, 0) = f.one();
        for (std::size_t j = 1; j < v; ++j)
            for (std::size_t a = 0; a < n; ++a)
                theta.at(a * v + j, j) = rnd();
        g = solve_gamma(d, theta);
    }
    rep.record("gamma_solvable", g.kind == GammaSolution::Kind::Unique, "no invertible theta found");
    if (g.kind != GammaSolution::Kind::Unique)
        return rep;
    const TwistPair pair{theta, g.gamma};
    const auto primed = derive_twisted_data(d, pair);
    rep.merge(primed.report);
    const auto w = build_phi(d, pair);
    rep.merge(verify_crossed_equivalence(primed.value, d, w));
    const auto ex = extract_twisting_pair(primed.value, d, w.phi, w.phi_inv);
    rep.merge(ex.report, "extracted.");
    compare_maps(rep, "extracted.theta", ex.pair.theta, pair.theta);
    compare_maps(rep, "extracted.gamma", ex.pair.gamma, pair.gamma);
    return rep;
}

} // namespace

// ---------------------------------------------------------------- parsing

Bundle parse_bundle(const std::string &text, const std::string &source) {
    const Locator loc(source, text);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(loc.line_of_byte(e.byte) + "malformed JSON: " + e.what());
    }
    if (!j.is_object())
        throw ParseError(source + ":1: a bundle must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "field" && it.key() != "spaces" && it.key() != "maps" && it.key() != "structures")
            throw ParseError(loc.at(it.key()) + "unknown top-level key '" + it.key() + "'");
    if (!j.contains("field"))
        throw ParseError(source + ":1: missing \"field\"");
    Bundle b;
    b.field = parse_field_json(j["field"], loc);
    const auto &f = b.field;
    if (j.contains("spaces")) {
        if (!j["spaces"].is_object())
            throw ParseError(loc.at("spaces") + "\"spaces\" must be an object");
        for (auto it = j["spaces"].begin(); it != j["spaces"].end(); ++it) {
            const auto &name = it.key();
            const auto &s = it.value();
            if (!s.is_object() || !s.contains("dim") || !s["dim"].is_number_unsigned() ||
                s["dim"].get<std::size_t>() == 0)
                throw ParseError(loc.at(name) + "space '" + name + "' needs a positive integer \"dim\"");
            SpaceEntry e{s["dim"].get<std::size_t>(), {}};
            if (s.contains("point")) {
                if (!s["point"].is_array() || s["point"].size() != e.dim)
                    throw ShapeMismatch(loc.at(name) + "space '" + name + "': point must have " +
                                        std::to_string(e.dim) + " entries");
                Vec v;
                for (const auto &x : s["point"])
                    v.push_back(to_scalar(f, x, loc, name));
                e.point = std::move(v);
            }
            b.spaces[name] = std::move(e);
        }
    }
    if (j.contains("maps")) {
        if (!j["maps"].is_object())
            throw ParseError(loc.at("maps") + "\"maps\" must be an object");
        for (auto it = j["maps"].begin(); it != j["maps"].end(); ++it) {
            const auto &name = it.key();
            const auto &m = it.value();
            if (!m.is_object() || !m.contains("domain") || !m.contains("codomain") || !m.contains("entries"))
                throw ParseError(loc.at(name) + "map '" + name + "' needs \"domain\", \"codomain\" and \"entries\"");
            const Shape dom = to_shape(m["domain"], loc, name);
            const Shape cod = to_shape(m["codomain"], loc, name);
            const auto &rows = m["entries"];
            if (!rows.is_array() || rows.size() != cod.total())
                throw ShapeMismatch(loc.at(name) + "map '" + name + "': expected " + std::to_string(cod.total()) +
                                    " rows for codomain " + cod.to_string());
            Vec entries;
            entries.reserve(cod.total() * dom.total());
            for (const auto &row : rows) {
                if (!row.is_array() || row.size() != dom.total())
                    throw ShapeMismatch(loc.at(name) + "map '" + name + "': expected rows of " +
                                        std::to_string(dom.total()) + " entries for domain " + dom.to_string());
                for (const auto &x : row)
                    entries.push_back(to_scalar(f, x, loc, name));
            }
            b.maps[name] = LinMap(f, dom, cod, std::move(entries));
        }
    }
    if (j.contains("structures")) {
        if (!j["structures"].is_object())
            throw ParseError(loc.at("structures") + "\"structures\" must be an object");
        for (auto it = j["structures"].begin(); it != j["structures"].end(); ++it) {
            const auto &name = it.key();
            const auto &s = it.value();
            if (!s.is_object() || !s.contains("type") || !s["type"].is_string())
                throw ParseError(loc.at(name) + "structure '" + name + "' needs a string \"type\"");
            StructureEntry e;
            e.type = s["type"].get<std::string>();
            for (auto r = s.begin(); r != s.end(); ++r) {
                if (r.key() == "type")
                    continue;
                if (!r.value().is_string())
                    throw ParseError(loc.at(name) + "structure '" + name + "': reference '" + r.key() +
                                     "' must be a name");
                e.refs[r.key()] = r.value().get<std::string>();
            }
            b.structures[name] = std::move(e);
        }
    }
    // Every reference must resolve before any computation runs.
    for (const auto &[name, s] : b.structures)
        for (const auto &[field, target] : s.refs)
            if (!b.maps.count(target) && !b.spaces.count(target) && !b.structures.count(target))
                throw UnknownName(loc.at(target) + "structure '" + name + "': '" + field + "' refers to unknown name '" +
                                  target + "'");
    return b;
}

std::string serialize(const Bundle &b) {
    json j;
    j["field"] = field_json(b.field);
    json spaces = json::object();
    for (const auto &[n, s] : b.spaces) {
        json e;
        e["dim"] = s.dim;
        if (s.point)
            e["point"] = vec_json(*s.point);
        spaces[n] = e;
    }
    j["spaces"] = spaces;
    json maps = json::object();
    for (const auto &[n, m] : b.maps) {
        json e;
        e["domain"] = shape_json(m.domain());
        e["codomain"] = shape_json(m.codomain());
        json rows = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r)
            rows.push_back(vec_json(m.row(r)));
        e["entries"] = rows;
        maps[n] = e;
    }
    j["maps"] = maps;
    json structures = json::object();
    for (const auto &[n, s] : b.structures) {
        json e;
        e["type"] = s.type;
        for (const auto &[k, v] : s.refs)
            e[k] = v;
        structures[n] = e;
    }
    j["structures"] = structures;
    return j.dump(1) + "\n";
}

// ---------------------------------------------------------------- getters

AlgebraData get_algebra(const Bundle &b, const std::string &name) {
    const auto &s = structure(b, name);
    if (s.type == "bialgebra" || s.type == "hopf")
        return get_bialgebra(b, name).alg;
    require_type(s, name, {"algebra"});
    AlgebraData a;
    a.field = b.field;
    a.dim = space_ref(b, s, name, "space").dim;
    a.mult = map_ref(b, s, name, "mult");
    const auto &u = map_ref(b, s, name, "unit");
    if (!(u.domain() == Shape{}) || !(u.codomain() == Shape{a.dim}))
        throw ShapeMismatch("structure '" + name + "': unit must be a map [] -> [" + std::to_string(a.dim) + "]");
    a.unit = u.entries();
    validate(a);
    return a;
}

CoalgebraData get_coalgebra(const Bundle &b, const std::string &name) {
    const auto &s = structure(b, name);
    if (s.type == "bialgebra" || s.type == "hopf")
        return get_bialgebra(b, name).coa;
    require_type(s, name, {"coalgebra"});
    CoalgebraData c;
    c.field = b.field;
    c.dim = space_ref(b, s, name, "space").dim;
    c.comult = map_ref(b, s, name, "comult");
    c.counit = map_ref(b, s, name, "counit");
    validate(c);
    return c;
}

BialgebraData get_bialgebra(const Bundle &b, const std::string &name) {
    const auto &s = structure(b, name);
    if (s.type == "hopf")
        return get_hopf(b, name).bia;
    require_type(s, name, {"bialgebra"});
    BialgebraData x{get_algebra(b, ref(s, name, "algebra")), get_coalgebra(b, ref(s, name, "coalgebra"))};
    validate(x);
    return x;
}

HopfData get_hopf(const Bundle &b, const std::string &name) {
    const auto &s = structure(b, name);
    require_type(s, name, {"hopf"});
    HopfData h{get_bialgebra(b, ref(s, name, "bialgebra")), map_ref(b, s, name, "antipode")};
    const Shape d{h.dim()};
    if (!(h.antipode.domain() == d) || !(h.antipode.codomain() == d))
        throw ShapeMismatch("structure '" + name + "': antipode must be " + d.to_string() + " -> " + d.to_string());
    return h;
}

CrossedData get_crossed(const Bundle &b, const std::string &name) {
    const auto &s = structure(b, name);
    if (s.type == "twisting_map")
        return as_crossed(get_twisting_map(b, name));
    require_type(s, name, {"crossed"});
    CrossedData d{get_algebra(b, ref(s, name, "A")), pointed_ref(b, s, name, "V", PointedSpace::Kind::Element),
                  map_ref(b, s, name, "R"), map_ref(b, s, name, "sigma")};
    validate(d);
    return d;
}

CoCrossedData get_cocrossed(const Bundle &b, const std::string &name) {
    const auto &s = structure(b, name);
    require_type(s, name, {"cocrossed"});
    CoCrossedData d{pointed_ref(b, s, name, "X", PointedSpace::Kind::Functional),
                    get_coalgebra(b, ref(s, name, "C")), map_ref(b, s, name, "W"), map_ref(b, s, name, "rho")};
    validate(d);
    return d;
}

TwistingMapData get_twisting_map(const Bundle &b, const std::string &name) {
    const auto &s = structure(b, name);
    require_type(s, name, {"twisting_map"});
    TwistingMapData d{get_algebra(b, ref(s, name, "A")), get_algebra(b, ref(s, name, "B")), map_ref(b, s, name, "R")};
    validate(d);
    return d;
}

TwistPair get_twist_pair(const Bundle &b, const std::string &name) {
    const auto &s = structure(b, name);
    require_type(s, name, {"twist_pair"});
    return TwistPair{map_ref(b, s, name, "theta"), map_ref(b, s, name, "gamma")};
}

namespace {

struct WitnessMaps {
    LinMap phi, phi_inv;
};

WitnessMaps get_witness(const Bundle &b, const std::string &name) {
    const auto &s = structure(b, name);
    require_type(s, name, {"witness"});
    return {map_ref(b, s, name, "phi"), map_ref(b, s, name, "phi_inv")};
}

QTStructure get_qt(const Bundle &b, const std::string &name) {
    const auto &s = structure(b, name);
    require_type(s, name, {"qt"});
    QTStructure q{get_hopf(b, ref(s, name, "hopf")), {}};
    const auto &r = map_ref(b, s, name, "r");
    const auto d = q.H.dim();
    if (!(r.domain() == Shape{}) || !(r.codomain() == Shape{d, d}))
        throw ShapeMismatch("structure '" + name + "': r must be a map [] -> [" + std::to_string(d) + "," +
                            std::to_string(d) + "]");
    q.r = r.entries();
    return q;
}

MirrorCrossedData get_mirror(const Bundle &b, const std::string &name) {
    const auto &s = structure(b, name);
    require_type(s, name, {"mirror"});
    MirrorCrossedData d{get_algebra(b, ref(s, name, "B")), pointed_ref(b, s, name, "W", PointedSpace::Kind::Element),
                        map_ref(b, s, name, "P"), map_ref(b, s, name, "nu")};
    validate(d);
    return d;
}

std::optional<MirrorCoCrossedData> get_mirror_co(const Bundle &b, const std::string &name) {
    const auto &s = structure(b, name);
    require_type(s, name, {"mirror"});
    if (!s.refs.count("D"))
        return std::nullopt;
    MirrorCoCrossedData d{get_coalgebra(b, ref(s, name, "D")),
                          pointed_ref(b, s, name, "Y", PointedSpace::Kind::Functional), map_ref(b, s, name, "U"),
                          map_ref(b, s, name, "eta")};
    validate(d);
    return d;
}

Built<BaseCrossBialgebra> get_base(const Bundle &b, const std::string &name) {
    const auto &s = structure(b, name);
    require_type(s, name, {"cross_bialgebra"});
    if (!is_standard_base(s))
        throw UnsupportedBase("structure '" + name +
                              "' is not in tensor-coalgebra form; give \"A\" (bialgebra), \"C\" and \"crossed\"");
    return make_base(get_bialgebra(b, ref(s, name, "A")), get_coalgebra(b, ref(s, name, "C")),
                     get_crossed(b, ref(s, name, "crossed")));
}

Built<CrossBialgebraData> get_cross_bialgebra(const Bundle &b, const std::string &name) {
    const auto &s = structure(b, name);
    require_type(s, name, {"cross_bialgebra"});
    if (is_standard_base(s)) {
        auto base = get_base(b, name);
        return Built<CrossBialgebraData>{base.value.fused, base.report};
    }
    return assemble_cross_bialgebra(get_crossed(b, ref(s, name, "crossed")),
                                    get_cocrossed(b, ref(s, name, "cocrossed")));
}

} // namespace

// ---------------------------------------------------------------- put

void put(Bundle &b, const std::string &name, const AlgebraData &a) {
    put_space(b, name + ".space", a.dim);
    put_map(b, name + ".mult", a.mult);
    put_map(b, name + ".unit", a.unit_map());
    b.structures[name] = {"algebra", {{"space", name + ".space"}, {"mult", name + ".mult"}, {"unit", name + ".unit"}}};
}

void put(Bundle &b, const std::string &name, const CoalgebraData &c) {
    put_space(b, name + ".space", c.dim);
    put_map(b, name + ".comult", c.comult);
    put_map(b, name + ".counit", c.counit);
    b.structures[name] = {
        "coalgebra", {{"space", name + ".space"}, {"comult", name + ".comult"}, {"counit", name + ".counit"}}};
}

void put(Bundle &b, const std::string &name, const BialgebraData &x) {
    put(b, name + ".alg", x.alg);
    put(b, name + ".coa", x.coa);
    b.structures[name] = {"bialgebra", {{"algebra", name + ".alg"}, {"coalgebra", name + ".coa"}}};
}

void put(Bundle &b, const std::string &name, const HopfData &h) {
    put(b, name + ".bia", h.bia);
    put_map(b, name + ".antipode", h.antipode);
    b.structures[name] = {"hopf", {{"bialgebra", name + ".bia"}, {"antipode", name + ".antipode"}}};
}

void put(Bundle &b, const std::string &name, const CrossedData &d) {
    put(b, name + ".A", d.A);
    put_pointed(b, name + ".V", d.V);
    put_map(b, name + ".R", d.R);
    put_map(b, name + ".sigma", d.sigma);
    b.structures[name] = {
        "crossed", {{"A", name + ".A"}, {"V", name + ".V"}, {"R", name + ".R"}, {"sigma", name + ".sigma"}}};
}

void put(Bundle &b, const std::string &name, const CoCrossedData &d) {
    put_pointed(b, name + ".X", d.X);
    put(b, name + ".C", d.C);
    put_map(b, name + ".W", d.W);
    put_map(b, name + ".rho", d.rho);
    b.structures[name] = {
        "cocrossed", {{"X", name + ".X"}, {"C", name + ".C"}, {"W", name + ".W"}, {"rho", name + ".rho"}}};
}

void put(Bundle &b, const std::string &name, const TwistingMapData &d) {
    put(b, name + ".A", d.A);
    put(b, name + ".B", d.B);
    put_map(b, name + ".R", d.R);
    b.structures[name] = {"twisting_map", {{"A", name + ".A"}, {"B", name + ".B"}, {"R", name + ".R"}}};
}

void put(Bundle &b, const std::string &name, const TwistPair &p) {
    put_map(b, name + ".theta", p.theta);
    put_map(b, name + ".gamma", p.gamma);
    b.structures[name] = {"twist_pair", {{"theta", name + ".theta"}, {"gamma", name + ".gamma"}}};
}

void put(Bundle &b, const std::string &name, const QTStructure &q) {
    put(b, name + ".H", q.H);
    put_map(b, name + ".r", q.element());
    b.structures[name] = {"qt", {{"hopf", name + ".H"}, {"r", name + ".r"}}};
}

void put(Bundle &b, const std::string &name, const MirrorCrossedData &alg,
         const std::optional<MirrorCoCrossedData> &coa) {
    put(b, name + ".B", alg.B);
    put_pointed(b, name + ".W", alg.W);
    put_map(b, name + ".P", alg.P);
    put_map(b, name + ".nu", alg.nu);
    StructureEntry e{"mirror", {{"B", name + ".B"}, {"W", name + ".W"}, {"P", name + ".P"}, {"nu", name + ".nu"}}};
    if (coa) {
        put(b, name + ".D", coa->D);
        put_pointed(b, name + ".Y", coa->Y);
        put_map(b, name + ".U", coa->U);
        put_map(b, name + ".eta", coa->eta);
        e.refs["D"] = name + ".D";
        e.refs["Y"] = name + ".Y";
        e.refs["U"] = name + ".U";
        e.refs["eta"] = name + ".eta";
    }
    b.structures[name] = std::move(e);
}

void put(Bundle &b, const std::string &name, const BaseCrossBialgebra &base) {
    put(b, name + ".A", base.A);
    put(b, name + ".C", base.C);
    put(b, name + ".crossed", base.crossed);
    b.structures[name] = {"cross_bialgebra",
                          {{"A", name + ".A"}, {"C", name + ".C"}, {"crossed", name + ".crossed"}}};
}

void put(Bundle &b, const std::string &name, const CrossBialgebraData &d) {
    put(b, name + ".crossed", d.crossed);
    put(b, name + ".cocrossed", d.cocrossed);
    b.structures[name] = {"cross_bialgebra", {{"crossed", name + ".crossed"}, {"cocrossed", name + ".cocrossed"}}};
}

// ---------------------------------------------------------------- catalog

std::vector<std::string> catalog_names() {
    return {"z1", "z2", "z3", "z4", "h4", "qt-z2", "double-z2", "double-h4", "biproduct-z2"};
}

Bundle export_object(const std::string &name, FieldSpec f) {
    Bundle b;
    b.field = f;
    if (name.size() >= 2 && name[0] == 'z' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
        const auto n = std::stoul(name.substr(1));
        if (n == 0)
            throw UnknownName("export: group order must be positive");
        put(b, name, group_algebra(n, f));
        put(b, name + ".dual", dualize(group_algebra(n, f).bia));
    } else if (name == "h4") {
        const auto h = sweedler_h4(f);
        put(b, "h4", h);
        put(b, "h4.dual", dualize(h.bia));
    } else if (name == "qt-z2") {
        put(b, "qt", qt_structure_z2(f));
    } else if (name == "double-z2" || name == "double-h4") {
        const auto d = drinfeld_double(name == "double-z2" ? group_algebra(2, f) : sweedler_h4(f));
        put(b, "double", d.carrier);
        put(b, "double.mirror", d.as_mirror, d.as_mirror_co);
    } else if (name == "biproduct-z2") {
        const auto r = radford_biproduct_z2(f);
        put(b, "qt", r.qt);
        put(b, "biproduct", r.carrier);
        put(b, "biproduct.braided", BialgebraData{r.braided_alg, r.braided_coa});
        put(b, "biproduct.mirror", r.alg, r.coa);
    } else {
        throw UnknownName("export: unknown catalog object '" + name + "'");
    }
    return b;
}

// ---------------------------------------------------------------- checks

CheckReport check_bundle(const Bundle &b, const std::optional<std::string> &only) {
    CheckReport rep;
    auto one = [&](const std::string &name, const StructureEntry &s) {
        const std::string pre = name + ".";
        if (s.type == "algebra")
            rep.merge(check_algebra(get_algebra(b, name)), pre);
        else if (s.type == "coalgebra")
            rep.merge(check_coalgebra(get_coalgebra(b, name)), pre);
        else if (s.type == "bialgebra")
            rep.merge(check_bialgebra(get_bialgebra(b, name)), pre);
        else if (s.type == "hopf")
            rep.merge(check_hopf(get_hopf(b, name)).report, pre);
        else if (s.type == "crossed")
            rep.merge(build_crossed_product(get_crossed(b, name)).report, pre);
        else if (s.type == "cocrossed")
            rep.merge(build_crossed_coproduct(get_cocrossed(b, name)).report, pre);
        else if (s.type == "twisting_map")
            rep.merge(build_twisted_tensor(get_twisting_map(b, name)).report, pre);
        else if (s.type == "cross_bialgebra")
            rep.merge(get_cross_bialgebra(b, name).report, pre);
        else if (s.type == "mirror") {
            const auto alg = get_mirror(b, name);
            const auto coa = get_mirror_co(b, name);
            rep.merge(coa ? assemble_mirror_cross_bialgebra(alg, *coa).report : build_mirror_crossed(alg).report,
                      pre);
        } else if (s.type == "qt")
            rep.merge(check_qt(get_qt(b, name)), pre);
        else if (s.type == "twist_pair" || s.type == "witness")
            return; // data only; checked against a base by twist / extract
        else
            throw ParseError("structure '" + name + "': unknown type '" + s.type + "'");
    };
    if (only) {
        one(*only, structure(b, *only));
        return rep;
    }
    for (const auto &[name, s] : b.structures)
        one(name, s);
    return rep;
}

std::string report_json(const std::string &command, const CheckReport &r, bool verbose) {
    json j;
    j["command"] = command;
    j["ok"] = r.ok();
    json ids = json::array();
    std::size_t failed = 0;
    for (const auto &x : r.results()) {
        json e;
        e["name"] = x.name;
        e["verdict"] = x.ok() ? "pass" : "fail";
        e["checked"] = x.checked;
        e["failed"] = x.failed;
        if (verbose || !x.ok()) {
            json ex = json::array();
            for (const auto &v : x.examples) {
                json vj;
                vj["indices"] = v.indices;
                if (!v.detail.empty()) {
                    vj["detail"] = v.detail;
                } else {
                    vj["lhs"] = v.lhs.to_string();
                    vj["rhs"] = v.rhs.to_string();
                }
                ex.push_back(vj);
            }
            e["examples"] = ex;
        }
        failed += x.ok() ? 0 : 1;
        ids.push_back(e);
    }
    j["identities"] = ids;
    j["summary"] = {{"identities", r.results().size()}, {"failed", failed}};
    return j.dump(1);
}

// ---------------------------------------------------------------- run

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Crossed products, cross product bialgebras and their equivalences over Q and F_p", "crossbi"};
    app.require_subcommand(1, 1);
    std::optional<std::string> field_flag;
    bool as_json = false, verbose = false;
    std::uint64_t seed = 1;
    std::string output;
    app.add_option("--field", field_flag, "Q or F<p>");
    app.add_flag("--json", as_json, "machine-readable report");
    app.add_flag("--verbose", verbose, "list violations for passing identities too");
    app.add_option("--seed", seed, "seed for randomized demos");
    app.add_option("-o,--output", output, "output bundle path");

    auto *check = app.add_subcommand("check", "run the axiom suite of every structure in a bundle");
    std::string check_path;
    std::optional<std::string> check_only;
    check->add_option("bundle", check_path)->required();
    check->add_option("--structure", check_only, "check only this structure");

    auto *build = app.add_subcommand("build", "build a product from a bundle structure");
    std::string build_kind, build_path;
    std::optional<std::string> build_name;
    build->add_option("kind", build_kind)
        ->required()
        ->check(CLI::IsMember({"crossed", "cocrossed", "ttp", "cross-bialgebra", "mirror"}));
    build->add_option("bundle", build_path)->required();
    build->add_option("--structure", build_name, "structure to build (default: the first of the matching type)");

    auto *twist = app.add_subcommand("twist", "apply a twisting pair to a crossed product or cross product bialgebra");
    std::string twist_path, twist_pair = "identity";
    std::optional<std::string> twist_base;
    twist->add_option("bundle", twist_path)->required();
    twist->add_option("--pair", twist_pair, "bundle with a twist_pair structure, or 'identity'");
    twist->add_option("--base", twist_base, "base structure (crossed, twisting_map or cross_bialgebra)");

    auto *extract = app.add_subcommand("extract", "recover the twisting pair from an equivalence");
    std::string extract_path;
    std::optional<std::string> ex_base, ex_primed, ex_witness;
    extract->add_option("bundle", extract_path)->required();
    extract->add_option("--base", ex_base)->required();
    extract->add_option("--primed", ex_primed)->required();
    extract->add_option("--witness", ex_witness, "witness structure (default: the first one)");

    auto *demo = app.add_subcommand("demo", "run a catalog pipeline");
    std::string demo_name;
    demo->add_option("name", demo_name)->required()->check(CLI::IsMember({"majid", "double-h4", "qt", "twist"}));

    auto *exp = app.add_subcommand("export", "write a catalog object as a bundle");
    std::string exp_name;
    exp->add_option("object", exp_name)->required();

    // Global flags are accepted after the subcommand as well.
    for (auto *sub : {check, build, twist, extract, demo, exp}) {
        sub->fallthrough();
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "crossbi: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*check) {
            const Loaded l = load(check_path);
            check_field_flag(l.bundle, field_flag);
            const auto rep = with_context(l, [&] { return check_bundle(l.bundle, check_only); });
            return emit("check", rep, as_json, verbose, out);
        }
        if (*build) {
            const Loaded l = load(build_path);
            check_field_flag(l.bundle, field_flag);
            Bundle result;
            result.field = l.bundle.field;
            CheckReport rep;
            with_context(l, [&] {
                const std::map<std::string, std::string> type_of{{"crossed", "crossed"},
                                                                 {"cocrossed", "cocrossed"},
                                                                 {"ttp", "twisting_map"},
                                                                 {"cross-bialgebra", "cross_bialgebra"},
                                                                 {"mirror", "mirror"}};
                const auto name = build_name ? *build_name : first_of_type(l.bundle, type_of.at(build_kind));
                if (build_kind == "crossed") {
                    auto r = build_crossed_product(get_crossed(l.bundle, name));
                    rep = r.report;
                    put(result, name + ".product", r.value);
                } else if (build_kind == "cocrossed") {
                    auto r = build_crossed_coproduct(get_cocrossed(l.bundle, name));
                    rep = r.report;
                    put(result, name + ".coproduct", r.value);
                } else if (build_kind == "ttp") {
                    auto r = build_twisted_tensor(get_twisting_map(l.bundle, name));
                    rep = r.report;
                    put(result, name + ".product", r.value);
                } else if (build_kind == "cross-bialgebra") {
                    auto r = get_cross_bialgebra(l.bundle, name);
                    rep = r.report;
                    put(result, name + ".bialgebra", r.value.fused);
                } else {
                    const auto alg = get_mirror(l.bundle, name);
                    const auto coa = get_mirror_co(l.bundle, name);
                    if (coa) {
                        auto r = assemble_mirror_cross_bialgebra(alg, *coa);
                        rep = r.report;
                        put(result, name + ".bialgebra", r.value.fused);
                    } else {
                        auto r = build_mirror_crossed(alg);
                        rep = r.report;
                        put(result, name + ".product", r.value);
                    }
                }
                return 0;
            });
            if (!output.empty())
                write_file(output, serialize(result));
            return emit("build", rep, as_json, verbose, out);
        }
        if (*twist) {
            const Loaded l = load(twist_path);
            check_field_flag(l.bundle, field_flag);
            Bundle result;
            result.field = l.bundle.field;
            CheckReport rep;
            with_context(l, [&] {
                std::string name;
                if (twist_base) {
                    name = *twist_base;
                } else {
                    for (const char *t : {"cross_bialgebra", "crossed", "twisting_map"}) {
                        for (const auto &[n, s] : l.bundle.structures)
                            if (s.type == t) {
                                name = n;
                                break;
                            }
                        if (!name.empty())
                            break;
                    }
                    if (name.empty())
                        throw UnknownName("no crossed, twisting_map or cross_bialgebra structure to twist");
                }
                const auto &s = structure(l.bundle, name);
                if (s.type == "cross_bialgebra") {
                    const auto base = get_base(l.bundle, name);
                    rep.merge(base.report, "base.");
                    const auto pair = load_pair(twist_pair, l.bundle, base.value.crossed);
                    const auto res = verify_bialgebra_equivalence(base.value, pair);
                    rep.merge(res.report);
                    put(result, name + ".primed", res.value.primed);
                    put_map(result, name + ".witness.phi", res.value.witness.phi);
                    put_map(result, name + ".witness.phi_inv", res.value.witness.phi_inv);
                    result.structures[name + ".witness"] = {
                        "witness", {{"phi", name + ".witness.phi"}, {"phi_inv", name + ".witness.phi_inv"}}};
                } else {
                    const auto d = get_crossed(l.bundle, name);
                    rep.merge(build_crossed_product(d).report, "base.");
                    const auto pair = load_pair(twist_pair, l.bundle, d);
                    const auto primed = derive_twisted_data(d, pair);
                    rep.merge(primed.report);
                    put(result, name + ".primed", primed.value);
                    try {
                        const auto w = build_phi(d, pair);
                        rep.merge(verify_crossed_equivalence(primed.value, d, w));
                        put_map(result, name + ".witness.phi", w.phi);
                        put_map(result, name + ".witness.phi_inv", w.phi_inv);
                        result.structures[name + ".witness"] = {
                            "witness", {{"phi", name + ".witness.phi"}, {"phi_inv", name + ".witness.phi_inv"}}};
                    } catch (const NotInvertible &e) {
                        rep.record("phi_invertible", false, e.what());
                    }
                }
                return 0;
            });
            if (!output.empty())
                write_file(output, serialize(result));
            return emit("twist", rep, as_json, verbose, out);
        }
        if (*extract) {
            const Loaded l = load(extract_path);
            check_field_flag(l.bundle, field_flag);
            Bundle result;
            result.field = l.bundle.field;
            CheckReport rep;
            with_context(l, [&] {
                const auto wname = ex_witness ? *ex_witness : first_of_type(l.bundle, "witness");
                const auto w = get_witness(l.bundle, wname);
                const auto &s = structure(l.bundle, *ex_base);
                ExtractedPair ex;
                try {
                    if (s.type == "cross_bialgebra") {
                        const auto base = get_base(l.bundle, *ex_base);
                        const auto primed = get_cross_bialgebra(l.bundle, *ex_primed);
                        ex = extract_bialgebra_pair(base.value, primed.value, w.phi, w.phi_inv);
                    } else {
                        ex = extract_twisting_pair(get_crossed(l.bundle, *ex_primed), get_crossed(l.bundle, *ex_base),
                                                   w.phi, w.phi_inv);
                    }
                } catch (const NotEquivalence &e) {
                    rep.record("equivalence", false, e.what());
                    return 0;
                }
                rep.merge(ex.report);
                put(result, "pair", ex.pair);
                return 0;
            });
            if (!output.empty() && rep.ok())
                write_file(output, serialize(result));
            return emit("extract", rep, as_json, verbose, out);
        }
        if (*demo) {
            const FieldSpec f = field_flag ? parse_field_flag(*field_flag) : FieldSpec::rationals();
            CheckReport rep;
            if (demo_name == "majid") {
                rep = majid_equivalence_demo(f);
            } else if (demo_name == "double-h4") {
                rep = check_double(drinfeld_double(sweedler_h4(f)));
            } else if (demo_name == "qt") {
                rep = check_qt(qt_structure_z2(f));
            } else {
                rep = random_twist_demo(f, seed, 2, 3);
            }
            return emit("demo " + demo_name, rep, as_json, verbose, out);
        }
        if (*exp) {
            const FieldSpec f = field_flag ? parse_field_flag(*field_flag) : FieldSpec::rationals();
            const auto text = serialize(export_object(exp_name, f));
            if (output.empty())
                out << text;
            else
                write_file(output, text);
            return 0;
        }
    } catch (const Error &e) {
        err << "crossbi: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "crossbi: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace crossbi::cli
