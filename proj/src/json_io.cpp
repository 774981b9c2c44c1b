#include "prettygood/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace prettygood {

Json to_json(const Integer& v) {
    if (v.fits_slong_p()) {
        return Json(static_cast<std::int64_t>(v.get_si()));
    }
    return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0) {
            throw JsonFormatError("not a decimal integer: " + j.get<std::string>());
        }
        return v;
    }
    throw JsonFormatError("expected an integer, got " + j.dump());
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) {
        throw JsonFormatError("matrix must be an array of rows");
    }
    std::vector<std::vector<Integer>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) {
            throw JsonFormatError("matrix row must be an array");
        }
        std::vector<Integer> r;
        for (const auto& x : row) {
            r.push_back(integer_from_json(x));
        }
        rows.push_back(std::move(r));
    }
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    try {
        return IntMatrix::from_rows(rows, cols);
    } catch (const DimensionError& e) {
        throw JsonFormatError(std::string("ragged matrix: ") + e.what());
    }
}

Json to_json(const FinAbGroup& g) {
    Json t = Json::array();
    for (const auto& x : g.torsion) {
        t.push_back(to_json(x));
    }
    return Json{{"torsion", t}, {"free_rank", g.free_rank}};
}

FinAbGroup group_from_json(const Json& j) {
    FinAbGroup g;
    try {
        for (const auto& x : j.at("torsion")) {
            g.torsion.push_back(integer_from_json(x));
        }
        g.free_rank = j.at("free_rank").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw JsonFormatError(std::string("bad group: ") + e.what());
    }
    return g;
}

Json to_json(const RootDatum& r) {
    return Json{{"rank", r.rank()}, {"roots", r.roots()}, {"coroots", r.coroots()}};
}

RootDatum datum_from_json(const Json& j) {
    try {
        if (!j.is_object()) {
            throw JsonFormatError("root datum must be a JSON object");
        }
        const auto rank = j.at("rank").get<std::size_t>();
        auto roots = j.at("roots").get<std::vector<Vector>>();
        auto coroots = j.at("coroots").get<std::vector<Vector>>();
        return RootDatum(rank, std::move(roots), std::move(coroots));
    } catch (const nlohmann::json::exception& e) {
        throw JsonFormatError(std::string("bad root datum: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(std::string("bad root datum: ") + e.what());
    }
}

Json to_json(const RootSubset& s) {
    return Json(s.indices);
}

RootSubset subset_from_json(const Json& j) {
    try {
        return RootSubset(j.get<std::vector<std::size_t>>());
    } catch (const nlohmann::json::exception& e) {
        throw JsonFormatError(std::string("bad root subset: ") + e.what());
    }
}

Json to_json(const PrimeReport& rep) {
    return Json{{"p", rep.p},
                {"bad", rep.bad},
                {"good", rep.good},
                {"very_good", rep.very_good},
                {"pretty_good", rep.pretty_good},
                {"center_smooth", rep.center_smooth},
                {"dual_center_smooth", rep.dual_center_smooth}};
}

PrimeReport report_from_json(const Json& j) {
    try {
        PrimeReport rep;
        rep.p = j.at("p").get<long>();
        rep.bad = j.at("bad").get<bool>();
        rep.good = j.at("good").get<bool>();
        rep.very_good = j.at("very_good").get<bool>();
        rep.pretty_good = j.at("pretty_good").get<bool>();
        rep.center_smooth = j.at("center_smooth").get<bool>();
        rep.dual_center_smooth = j.at("dual_center_smooth").get<bool>();
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw JsonFormatError(std::string("bad prime report: ") + e.what());
    }
}

Json to_json(const Decomposition& d) {
    Json vg = Json::array();
    for (const auto& c : d.vg_blocks) {
        vg.push_back(c.name());
    }
    return Json{{"p", d.p},
                {"torus_rank", d.torus_rank},
                {"a_blocks", d.a_blocks},
                {"vg_blocks", vg},
                {"witness_ok", d.witness_ok},
                {"torus_augmentation", d.torus_augmentation}};
}

Json to_json(const GluingCheck& g) {
    Json divisors = Json::array();
    for (const auto& d : g.divisors) {
        divisors.push_back(to_json(d));
    }
    return Json{{"matrix", to_json(g.matrix)}, {"exponents", g.exponents},
                {"p", g.p},                    {"divisors", divisors},
                {"rank_mod_p", g.rank_mod_p},  {"surjective", g.surjective}};
}

Json to_json(const Isogeny& f) {
    return Json{{"source", to_json(f.source)},
                {"target", to_json(f.target)},
                {"matrix", to_json(f.matrix)}};
}

Isogeny isogeny_from_json(const Json& j) {
    try {
        return {datum_from_json(j.at("source")), datum_from_json(j.at("target")),
                matrix_from_json(j.at("matrix"))};
    } catch (const nlohmann::json::exception& e) {
        throw JsonFormatError(std::string("bad isogeny: ") + e.what());
    }
}

namespace {

Json parse_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonFormatError("malformed JSON in " + origin + ": " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw JsonFormatError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

Json load_json(const std::string& input) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(input, ec)) {
        return parse_text(read_file(input), input);
    }
    return parse_text(input, "argument");
}

RootDatum load_datum(const std::string& input) {
    std::error_code ec;
    const bool is_file = std::filesystem::is_regular_file(input, ec);
    const auto pos = input.find_first_not_of(" \t\r\n");
    const char lead = pos == std::string::npos ? '\0' : input[pos];
    if (!is_file && lead != '{' && lead != '"') {
        return preset(input);
    }
    const Json j = load_json(input);
    if (j.is_string()) {
        return preset(j.get<std::string>());
    }
    return datum_from_json(j);
}

}  // namespace prettygood
