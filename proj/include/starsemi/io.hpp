#pragma once

#include <string>
#include <string_view>

#include "starsemi/decompose.hpp"

namespace starsemi {

// Text forms. Rendering is canonical and byte-stable; parsing accepts
// flexible whitespace and reports the byte offset on failure.
//   semigroup:     G(4,6,7,9)
//   graph:         sf(-2; 2x(2,1), 2x(4,1), (5,1))
//   presentation:  flat(alpha=[2,3], s=[5,10])

std::string render_semigroup(const NumericalSemigroup& s);
GeneratorSet parse_generators(std::string_view text);  // G(...) or bare list "4 6 7 9"

std::string render_graph(const SSRGraph& g);
SSRGraph parse_graph(std::string_view text);

std::string render_flat(const FlatPresentation& f);
FlatPresentation parse_flat(std::string_view text);

// JSON records (stable machine interface).
//   semigroup:   {"generators": [...]}
//   graph:       {"b0": 2, "legs": [{"alpha": 2, "omega": 1, "mult": 2}, ...]}
//   certificate: {"graph": ..., "flat": {"alpha": [...], "s": [...]},
//                 "divisor": n, "verified": true}

std::string graph_to_json(const SSRGraph& g);
SSRGraph graph_from_json(std::string_view text);

std::string certificate_to_json(const QuotientCertificate& c);
struct CertificateFile {
    SSRGraph graph;
    FlatPresentation flat;
    Int divisor;
};
CertificateFile certificate_from_json(std::string_view text);

}  // namespace starsemi
