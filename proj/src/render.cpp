#include "projcad/render.hpp"

#include <json.hpp>
#include <sstream>

namespace projcad {

OutputFormat format_from_string(const std::string& s) {
    if (s == "json") {
        return OutputFormat::Json;
    }
    if (s == "text") {
        return OutputFormat::Text;
    }
    if (s == "piecewise") {
        return OutputFormat::Piecewise;
    }
    if (s == "count") {
        return OutputFormat::Count;
    }
    throw DomainError("unknown output format '" + s + "'");
}

std::string rational_string(const Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

namespace {

using Json = nlohmann::ordered_json;

Json coordinate_json(const AlgebraicCoordinate& c, const VarOrder& order) {
    Json j;
    if (c.is_rational()) {
        j["rational"] = rational_string(c.rational());
    } else {
        j["rootOf"] = c.root().defining.to_string(order);
        j["interval"] = Json::array({rational_string(c.root().lo), rational_string(c.root().hi)});
    }
    return j;
}

std::string coordinate_text(const AlgebraicCoordinate& c, const VarOrder& order) {
    if (c.is_rational()) {
        return c.rational().get_str();
    }
    const RootOf& r = c.root();
    return "root of " + r.defining.to_string(order) + " in (" + r.lo.get_str() + ", " + r.hi.get_str() + ")";
}

std::string sample_text(const SamplePoint& s, const VarOrder& order) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i > 0 ? ", " : "") + coordinate_text(s[i], order);
    }
    return out + ")";
}

// Wraps a polynomial string in parentheses unless it is a single factor.
std::string factor(const std::string& s) {
    if (s.find_first_of("+ ") == std::string::npos && (s.empty() || s[0] != '-')) {
        return s;
    }
    return "(" + s + ")";
}

std::string negate_string(const Poly& p, const VarOrder& order) { return (-p).to_string(order); }

// Symbolic value of the ordinal-th real root of p in x_level over the base
// sample.
std::string root_expression(const RootRef& ref, int level, const SamplePoint& base, bool base_is_point,
                            const VarOrder& order) {
    Poly p = ref.poly;
    // Over a rational point every lower coordinate is pinned: show numbers.
    if (base_is_point && base.size() > 0 && base.all_rational()) {
        p = substitute_rationals(p, base);
    }
    const unsigned d = p.degree_in(level);
    const std::vector<Poly> c = p.coeffs_in(level);
    if (d == 1) {
        const Poly num = -c[0];
        const Poly& den = c[1];
        if (num.is_constant() && den.is_constant()) {
            Rational v(num.constant_value(), den.constant_value());
            v.canonicalize();
            return v.get_str();
        }
        if (den.is_constant() && den.constant_value() == 1) {
            return num.to_string(order);
        }
        if (den.is_constant() && den.constant_value() == -1) {
            return c[0].to_string(order);
        }
        return factor(num.to_string(order)) + "/" + factor(den.to_string(order));
    }
    if (d == 2 && c[0].is_constant() && c[1].is_constant() && c[2].is_constant()) {
        // Numeric quadratic: exact when the discriminant is a square.
        const Integer a = c[2].constant_value();
        const Integer b = c[1].constant_value();
        const Integer disc = b * b - 4 * a * c[0].constant_value();
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
            const Integer root = sqrt(disc);
            Rational r1(-b - root, 2 * a);
            Rational r2(-b + root, 2 * a);
            r1.canonicalize();
            r2.canonicalize();
            if (r2 < r1) {
                std::swap(r1, r2);
            }
            return (ref.ordinal == 1 && disc != 0 ? r1 : r2).get_str();
        }
    }
    if (d == 2) {
        const Poly& a = c[2];
        const Poly& b = c[1];
        const Poly disc = b * b - Poly(4) * a * c[0];
        SamplePoint s = base;
        const int disc_sign = sign_at(disc, s);
        const int a_sign = sign_at(a, s);
        if (disc_sign == 0) {
            // Double root -b/(2a).
            if (b.is_zero()) {
                return "0";
            }
            return factor(negate_string(b, order)) + "/" + factor((Poly(2) * a).to_string(order));
        }
        // Smaller root takes the minus sign when a > 0.
        const bool minus = (ref.ordinal == 1) == (a_sign > 0);
        if (b.is_zero()) {
            // +-sqrt(-c/a)
            std::string radicand;
            if (a.is_constant() && a.constant_value() == 1) {
                radicand = negate_string(c[0], order);
            } else if (a.is_constant() && a.constant_value() == -1) {
                radicand = c[0].to_string(order);
            } else {
                radicand = factor(negate_string(c[0], order)) + "/" + factor(a.to_string(order));
            }
            return std::string(minus ? "-" : "") + "sqrt(" + radicand + ")";
        }
        return "(" + negate_string(b, order) + (minus ? " - " : " + ") + "sqrt(" + disc.to_string(order) + "))/" +
               factor((Poly(2) * a).to_string(order));
    }
    return "root_" + std::to_string(ref.ordinal) + "(" + p.to_string(order) + ")";
}

}  // namespace

std::string bound_string(const CAD& cad, const Cell& cell, std::size_t level) {
    const Bound& b = cell.description.at(level);
    const std::string& v = cad.order.name(static_cast<int>(level) + 1);
    const SamplePoint base = cell.sample.prefix(level);
    bool point = true;
    for (std::size_t i = 0; i < level; ++i) {
        point = point && cell.index[i] % 2 == 0;
    }
    auto expr = [&](const RootRef& r) {
        return root_expression(r, static_cast<int>(level) + 1, base, point, cad.order);
    };
    switch (b.kind) {
        case Bound::Kind::Free:
            return v + " arbitrary";
        case Bound::Kind::Below:
            return v + " < " + expr(b.upper);
        case Bound::Kind::Equal:
            return v + " = " + expr(b.lower);
        case Bound::Kind::Between:
            return expr(b.lower) + " < " + v + " < " + expr(b.upper);
        case Bound::Kind::Above:
            return expr(b.lower) + " < " + v;
    }
    return v;
}

std::string render_json(const CAD& cad) {
    Json root;
    root["variables"] = cad.order.names();
    root["method"] = to_string(cad.method);
    root["finalOI"] = cad.final_oi;
    root["cellCount"] = cad.cells.size();
    Json warnings = Json::array();
    for (const auto& w : cad.warnings) {
        Json j;
        j["cell"] = w.cell;
        j["polynomial"] = w.poly.to_string(cad.order);
        warnings.push_back(std::move(j));
    }
    root["warnings"] = std::move(warnings);
    Json cells = Json::array();
    for (const auto& c : cad.cells) {
        Json j;
        j["index"] = c.index;
        j["dimension"] = c.dimension();
        Json sample = Json::array();
        for (const auto& coord : c.sample.coords()) {
            sample.push_back(coordinate_json(coord, cad.order));
        }
        j["sample"] = std::move(sample);
        cells.push_back(std::move(j));
    }
    root["cells"] = std::move(cells);
    return root.dump(2) + "\n";
}

std::string render_text(const CAD& cad) {
    std::ostringstream out;
    for (const auto& c : cad.cells) {
        out << index_string(c.index) << " | " << c.dimension() << " | " << sample_text(c.sample, cad.order)
            << "\n";
    }
    return out.str();
}

namespace {

void piecewise_level(const CAD& cad, std::size_t begin, std::size_t end, std::size_t level, std::ostringstream& out) {
    const std::size_t n = cad.order.size();
    const std::string indent(2 * level, ' ');
    std::size_t i = begin;
    while (i < end) {
        std::size_t j = i + 1;
        while (j < end && cad.cells[j].index[level] == cad.cells[i].index[level]) {
            ++j;
        }
        const Cell& c = cad.cells[i];
        const std::string cond = bound_string(cad, c, level);
        if (level + 1 == n) {
            out << indent << cond << ": " << sample_text(c.sample, cad.order) << "\n";
        } else {
            out << indent << cond << ":\n";
            piecewise_level(cad, i, j, level + 1, out);
        }
        i = j;
    }
}

}  // namespace

std::string render_piecewise(const CAD& cad) {
    std::ostringstream out;
    piecewise_level(cad, 0, cad.cells.size(), 0, out);
    return out.str();
}

std::string render(const CAD& cad, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json:
            return render_json(cad);
        case OutputFormat::Text:
            return render_text(cad);
        case OutputFormat::Piecewise:
            return render_piecewise(cad);
        case OutputFormat::Count:
            return std::to_string(cad.cells.size()) + "\n";
    }
    return {};
}

}  // namespace projcad
