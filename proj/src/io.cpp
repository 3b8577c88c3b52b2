#include "qi/io.hpp"

#include <sstream>

#include <json.hpp>

namespace qi::io {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

Rational rational_field(const json& v, const std::string& what) {
    if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>())));
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    throw ParseError(what + " must be an integer or a \"p/q\" string");
}

Integer integer_field(const json& v, const std::string& what) {
    const Rational r = rational_field(v, what);
    if (!r.is_integer()) throw ParseError(what + " must be an integer");
    return r.numerator();
}

const json& require(const json& j, const std::string& key) {
    if (!j.contains(key)) throw ParseError("missing field '" + key + "'");
    return j.at(key);
}

MultiPoly poly_field(const json& v, const std::string& what) {
    if (v.is_number_integer()) return MultiPoly(Rational(Integer(std::to_string(v.get<long long>()))));
    if (v.is_string()) return MultiPoly::parse(v.get<std::string>());
    throw ParseError(what + " must be an integer or a polynomial string");
}

}  // namespace

ClassicalData parse_manifold(const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_object()) throw ParseError("manifold spec must be a JSON object");
    const std::string name = j.contains("name") ? require(j, "name").get<std::string>() : "";
    const int b1 = static_cast<int>(integer_field(require(j, "b1"), "b1").get_si());
    const Integer tor = integer_field(require(j, "torOrder"), "torOrder");
    std::optional<Integer> cup;
    std::optional<Rational> mu;
    std::optional<AlexanderPolynomial> alex;
    if (j.contains("cupTriple")) cup = integer_field(j.at("cupTriple"), "cupTriple");
    if (j.contains("linkingMu")) mu = rational_field(j.at("linkingMu"), "linkingMu");
    if (j.contains("alexander")) {
        const json& list = j.at("alexander");
        if (!list.is_array() || list.empty())
            throw ParseError("alexander must be a non-empty array of coefficients t^0..t^d");
        std::vector<Rational> half;
        for (const auto& v : list) half.push_back(rational_field(v, "alexander coefficient"));
        alex = AlexanderPolynomial(SymmetricLaurent::from_half(std::move(half)));
    }
    return ClassicalData(name, b1, tor, std::move(cup), std::move(mu), std::move(alex));
}

WeightData parse_space(const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_object()) throw ParseError("space spec must be a JSON object");
    const std::string name = j.contains("name") ? require(j, "name").get<std::string>() : "";
    const int n = static_cast<int>(integer_field(require(j, "n"), "n").get_si());
    const Rational euler = rational_field(require(j, "eulerChar"), "eulerChar");
    const json& table = require(j, "pairing");
    if (!table.is_object()) throw ParseError("pairing must be an object keyed by partitions");
    std::map<Partition, Rational> pairing;
    for (const auto& [key, value] : table.items()) {
        const Partition p = parse_partition_key(key);
        if (!pairing.emplace(p, rational_field(value, "pairing entry")).second)
            throw ParseError("duplicate pairing key '" + key + "'");
    }
    return WeightData(name, n, euler, std::move(pairing));
}

ZVector parse_z_vector(const std::string& json_text) {
    const json j = parse_json(json_text);
    const int n = static_cast<int>(integer_field(require(j, "n"), "n").get_si());
    const json& list = require(j, "z");
    if (!list.is_array() || list.size() != static_cast<std::size_t>(n) + 1)
        throw ParseError("z must be an array of n+1 entries");
    ZVector z;
    for (const auto& v : list) z.z.push_back(poly_field(v, "z entry"));
    return z;
}

GData parse_g_data(const std::string& json_text) {
    const json j = parse_json(json_text);
    const int n = static_cast<int>(integer_field(require(j, "n"), "n").get_si());
    const json& list = require(j, "g");
    if (!list.is_array() || list.size() != static_cast<std::size_t>(n) + 1)
        throw ParseError("g must be an array of n+1 entries");
    std::vector<MultiPoly> g;
    for (const auto& v : list) g.push_back(poly_field(v, "g entry"));
    return GData(n, std::move(g));
}

AntisymMatrix parse_antisym_matrix(const std::string& json_text) {
    const json j = parse_json(json_text);
    const int size = static_cast<int>(integer_field(require(j, "size"), "size").get_si());
    const json& rows = require(j, "entries");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(size))
        throw ParseError("entries must be a size x size array");
    std::vector<std::vector<Rational>> a;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(size))
            throw ParseError("entries must be a size x size array");
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(rational_field(v, "matrix entry"));
        a.push_back(std::move(r));
    }
    return AntisymMatrix(std::move(a));
}

std::string render_diagram_series(const FormalDiagramSeries& s, Format format) {
    if (format == Format::Table) return s.str();
    json terms = json::array();
    for (const auto& [sym, c] : s.terms())
        terms.push_back({{"symbol", sym.str()}, {"degree", sym.degree()}, {"coeff", c.str()}});
    const json out = {{"order", s.order()}, {"terms", terms}};
    return out.dump();
}

std::string render_lambda(const LambdaVector& l, Format format) {
    if (format == Format::Machine) {
        json entries = json::array();
        for (const auto& p : l.lambda) entries.push_back(p.str());
        return json{{"n", l.n()}, {"lambda", entries}}.dump();
    }
    std::ostringstream out;
    for (int k = 0; k <= l.n(); ++k)
        out << "lambda^" << k << " = " << l.lambda[static_cast<std::size_t>(k)].str() << "\n";
    return out.str();
}

std::string render_consum(const ConsumReport& r, Format format) {
    if (format == Format::Machine) {
        return json{{"n", r.n}, {"verified", r.verified}, {"identities", r.identities}}.dump();
    }
    std::ostringstream out;
    out << (r.verified ? "identity verified for n = " : "IDENTITY FAILED for n = ") << r.n << "\n";
    for (const auto& line : r.identities) out << "  " << line << "\n";
    return out.str();
}

}  // namespace qi::io
