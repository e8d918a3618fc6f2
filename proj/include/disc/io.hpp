#pragma once

///
/// \file io.hpp
///
/// JSON readers and writers. Complex numbers are [re, im] pairs throughout.
///
/// Formats:
///   disc      {"dimension": n, "degree": d, "coefficients": [[[re,im], ...], ...]}
///   problem   {"dimension": n, "target_domain": "ball"|"polydisc",
///              "nodes": [[re,im], ...], "targets": [[[re,im], ...], ...]}
///   sequence  {"dimension": n, "points": [[[re,im], ...], ...]}
///   sigma     {"nodes": [[re,im], ...]}
///   function  {"dimension": n, "terms": [{"coefficient": [re,im], "exponents": [...]}, ...]}
///

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <disc/error.hpp>
#include <disc/geometry.hpp>
#include <disc/pick.hpp>
#include <disc/polynomial.hpp>
#include <disc/sequences.hpp>

namespace disc::io {

using nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        fail(ErrorKind::shape, std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

inline std::size_t size_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        fail(ErrorKind::shape, std::string("field \"") + key + "\" must be a nonnegative integer");
    }
    return v.get<std::size_t>();
}

inline const json& array_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) {
        fail(ErrorKind::shape, std::string("field \"") + key + "\" must be an array");
    }
    return v;
}

} // namespace detail

inline cplx complex_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        fail(ErrorKind::shape, "complex numbers must be [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

inline json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline std::vector<cplx> complex_list(const json& j) {
    if (!j.is_array()) {
        fail(ErrorKind::shape, "expected an array of [re, im] pairs");
    }
    std::vector<cplx> out;
    for (const auto& e : j) {
        out.push_back(complex_from(e));
    }
    return out;
}

inline json to_json(const std::vector<cplx>& v) {
    json a = json::array();
    for (const auto& z : v) {
        a.push_back(to_json(z));
    }
    return a;
}

inline CPoint point_from(const json& j, std::size_t dimension) {
    auto c = complex_list(j);
    if (c.size() != dimension) {
        fail(ErrorKind::shape, "point has " + std::to_string(c.size()) + " coordinates, expected " +
                                   std::to_string(dimension));
    }
    return CPoint(std::move(c));
}

inline json to_json(const CPoint& p) {
    return to_json(std::vector<cplx>(p.coords().begin(), p.coords().end()));
}

inline json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::shape, std::string("malformed JSON: ") + e.what());
    }
}

inline json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::shape, "cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

// disc

inline DiscMap disc_from(const json& j) {
    const std::size_t n = detail::size_field(j, "dimension");
    const std::size_t d = detail::size_field(j, "degree");
    std::vector<std::vector<cplx>> coeffs;
    for (const auto& row : detail::array_field(j, "coefficients")) {
        coeffs.push_back(complex_list(row));
    }
    return validate_disc_map(std::move(coeffs), n, d);
}

inline json to_json(const DiscMap& phi) {
    json rows = json::array();
    for (const auto& row : phi.coefficients()) {
        rows.push_back(to_json(row));
    }
    return {{"dimension", phi.dim()}, {"degree", phi.degree()}, {"coefficients", rows}};
}

// problem

inline TargetDomain domain_from(const std::string& s) {
    if (s == "ball") {
        return TargetDomain::ball;
    }
    if (s == "polydisc") {
        return TargetDomain::polydisc;
    }
    fail(ErrorKind::shape, "target_domain must be \"ball\" or \"polydisc\"");
}

inline PickProblem problem_from(const json& j) {
    const std::size_t n = detail::size_field(j, "dimension");
    TargetDomain dom = TargetDomain::ball;
    if (j.contains("target_domain")) {
        const json& d = j.at("target_domain");
        if (!d.is_string()) {
            fail(ErrorKind::shape, "target_domain must be a string");
        }
        dom = domain_from(d.get<std::string>());
    }
    auto nodes = complex_list(detail::array_field(j, "nodes"));
    std::vector<CPoint> targets;
    for (const auto& t : detail::array_field(j, "targets")) {
        targets.push_back(point_from(t, n));
    }
    return PickProblem(std::move(nodes), std::move(targets), dom);
}

inline json to_json(const PickProblem& p) {
    json t = json::array();
    for (const auto& v : p.targets()) {
        t.push_back(to_json(v));
    }
    return {{"dimension", p.dim()},
            {"target_domain", to_string(p.domain())},
            {"nodes", to_json(p.nodes())},
            {"targets", t}};
}

// sequence

inline PointSequence sequence_from(const json& j) {
    const std::size_t n = detail::size_field(j, "dimension");
    std::vector<CPoint> pts;
    for (const auto& a : detail::array_field(j, "points")) {
        pts.push_back(point_from(a, n));
    }
    return PointSequence(n, std::move(pts));
}

inline json to_json(const PointSequence& s) {
    json pts = json::array();
    for (const auto& a : s.points()) {
        pts.push_back(to_json(a));
    }
    return {{"dimension", s.dim()}, {"points", pts}};
}

// sigma

inline std::vector<cplx> sigma_from(const json& j) {
    auto nodes = complex_list(detail::array_field(j, "nodes"));
    for (const auto& a : nodes) {
        require_in_disc(a, "sigma");
    }
    return nodes;
}

// function

inline Polynomial polynomial_from(const json& j) {
    const std::size_t n = detail::size_field(j, "dimension");
    std::vector<Polynomial::Term> terms;
    for (const auto& t : detail::array_field(j, "terms")) {
        Polynomial::Term term;
        term.coefficient = complex_from(detail::field(t, "coefficient"));
        const json& e = detail::array_field(t, "exponents");
        for (const auto& x : e) {
            if (!x.is_number_integer() || x.get<long long>() < 0) {
                fail(ErrorKind::shape, "exponents must be nonnegative integers");
            }
            term.exponents.push_back(x.get<unsigned>());
        }
        terms.push_back(std::move(term));
    }
    return Polynomial(n, std::move(terms));
}

inline json to_json(const Polynomial& f) {
    json terms = json::array();
    for (const auto& t : f.terms()) {
        terms.push_back({{"coefficient", to_json(t.coefficient)}, {"exponents", t.exponents}});
    }
    return {{"dimension", f.dim()}, {"terms", terms}};
}

} // namespace disc::io
