#include "starsemi/io.hpp"

#include <cctype>

#include "json.hpp"

namespace starsemi {

namespace {

// Minimal cursor-based scanner shared by the text grammars.
class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!try_consume(c)) {
            throw ParseError(pos_, std::string("expected '") + c + "'");
        }
    }
    void expect_word(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word) {
            throw ParseError(pos_, "expected '" + std::string(word) + "'");
        }
        pos_ += word.size();
    }
    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(
                                                       text_[start])))) {
            throw ParseError(start, "expected integer");
        }
        try {
            return parse_int(text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            throw ParseError(start + e.position, "bad integer");
        }
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    std::size_t pos() const { return pos_; }
    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<Int> bracket_list(Scanner& s) {
    std::vector<Int> out;
    s.expect('[');
    if (!s.try_consume(']')) {
        do {
            out.push_back(s.integer());
        } while (s.try_consume(','));
        s.expect(']');
    }
    return out;
}

}  // namespace

std::string render_semigroup(const NumericalSemigroup& s) {
    std::string out = "G(";
    for (std::size_t i = 0; i < s.minimal_generators.size(); ++i) {
        if (i) out += ",";
        out += to_string(s.minimal_generators[i]);
    }
    return out + ")";
}

GeneratorSet parse_generators(std::string_view text) {
    Scanner s(text);
    std::vector<Int> gens;
    if (s.peek_is('G')) {
        s.expect_word("G");
        s.expect('(');
        do {
            gens.push_back(s.integer());
        } while (s.try_consume(','));
        s.expect(')');
    } else {
        while (!s.at_end()) {
            gens.push_back(s.integer());
            s.try_consume(',');
        }
    }
    if (!s.at_end()) throw ParseError(s.pos(), "trailing input");
    if (gens.empty()) throw ParseError(s.pos(), "no generators given");
    return GeneratorSet::of(std::move(gens));
}

std::string render_graph(const SSRGraph& g) {
    std::string out = "sf(" + to_string(-g.b0);
    if (!g.legs.empty()) out += ";";
    for (std::size_t i = 0; i < g.legs.size(); ++i) {
        out += i ? ", " : " ";
        const SeifertLeg& leg = g.legs[i];
        if (leg.mult > Int(1)) out += to_string(leg.mult) + "x";
        out += "(" + to_string(leg.alpha) + "," + to_string(leg.omega) + ")";
    }
    return out + ")";
}

SSRGraph parse_graph(std::string_view text) {
    Scanner s(text);
    s.expect_word("sf");
    s.expect('(');
    Int neg_b0 = s.integer();
    if (neg_b0 > Int(-1)) {
        throw ParseError(s.pos(), "central weight must be <= -1 (b0 >= 1)");
    }
    std::vector<SeifertLeg> legs;
    if (s.try_consume(';')) {
        if (!s.peek_is(')')) {
            do {
                SeifertLeg leg;
                if (!s.peek_is('(')) {
                    leg.mult = s.integer();
                    if (!s.try_consume('x')) {
                        throw ParseError(s.pos(), "expected 'x' after leg multiplicity");
                    }
                }
                s.expect('(');
                leg.alpha = s.integer();
                s.expect(',');
                leg.omega = s.integer();
                s.expect(')');
                legs.push_back(leg);
            } while (s.try_consume(','));
        }
    }
    s.expect(')');
    if (!s.at_end()) throw ParseError(s.pos(), "trailing input");
    return SSRGraph::of(-neg_b0, std::move(legs));
}

std::string render_flat(const FlatPresentation& f) {
    std::string out = "flat(alpha=[";
    for (std::size_t i = 0; i < f.alphas.size(); ++i) {
        if (i) out += ",";
        out += to_string(f.alphas[i]);
    }
    out += "], s=[";
    for (std::size_t i = 0; i < f.mults.size(); ++i) {
        if (i) out += ",";
        out += to_string(f.mults[i]);
    }
    return out + "])";
}

FlatPresentation parse_flat(std::string_view text) {
    Scanner s(text);
    s.expect_word("flat");
    s.expect('(');
    s.expect_word("alpha");
    s.expect('=');
    std::vector<Int> alphas = bracket_list(s);
    s.expect(',');
    s.expect_word("s");
    s.expect('=');
    std::vector<Int> mults = bracket_list(s);
    s.expect(')');
    if (!s.at_end()) throw ParseError(s.pos(), "trailing input");
    return FlatPresentation::of(std::move(alphas), std::move(mults));
}

namespace {

using nlohmann::json;

long long json_int(const Int& v) { return v.to_int64(); }

json graph_record(const SSRGraph& g) {
    json legs = json::array();
    for (const SeifertLeg& leg : g.legs) {
        legs.push_back({{"alpha", json_int(leg.alpha)},
                        {"omega", json_int(leg.omega)},
                        {"mult", json_int(leg.mult)}});
    }
    return json{{"b0", json_int(g.b0)}, {"legs", std::move(legs)}};
}

SSRGraph graph_from_record(const json& j) {
    std::vector<SeifertLeg> legs;
    for (const json& leg : j.at("legs")) {
        legs.push_back(SeifertLeg{Int(leg.at("alpha").get<long long>()),
                                  Int(leg.at("omega").get<long long>()),
                                  Int(leg.value("mult", 1LL))});
    }
    return SSRGraph::of(Int(j.at("b0").get<long long>()), std::move(legs));
}

}  // namespace

std::string graph_to_json(const SSRGraph& g) { return graph_record(g).dump(); }

SSRGraph graph_from_json(std::string_view text) {
    try {
        return graph_from_record(json::parse(text));
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("bad graph record: ") + e.what());
    }
}

std::string certificate_to_json(const QuotientCertificate& c) {
    json alphas = json::array(), mults = json::array();
    for (const Int& a : c.flat.alphas) alphas.push_back(json_int(a));
    for (const Int& m : c.flat.mults) mults.push_back(json_int(m));
    json record{{"graph", graph_record(c.perturbed_graph)},
                {"flat", {{"alpha", std::move(alphas)}, {"s", std::move(mults)}}},
                {"divisor", json_int(c.divisor)},
                {"verified", true}};
    return record.dump();
}

CertificateFile certificate_from_json(std::string_view text) {
    try {
        json j = json::parse(text);
        std::vector<Int> alphas, mults;
        for (const json& a : j.at("flat").at("alpha")) alphas.push_back(Int(a.get<long long>()));
        for (const json& m : j.at("flat").at("s")) mults.push_back(Int(m.get<long long>()));
        return CertificateFile{graph_from_record(j.at("graph")),
                               FlatPresentation::of(std::move(alphas), std::move(mults)),
                               Int(j.at("divisor").get<long long>())};
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("bad certificate record: ") + e.what());
    }
}

}  // namespace starsemi
