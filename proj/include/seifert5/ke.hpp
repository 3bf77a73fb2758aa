#pragma once

// Arithmetic sufficient conditions for orbifold Kaehler-Einstein metrics on
// (S, (1 - 1/m) C). Verdicts are only ever positive or indeterminate.

#include "seifert5/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seifert5 {

enum class KEVerdict { positive, indeterminate };
std::string to_string(KEVerdict v);

struct Inequality {
    std::string expression;
    Rational value;
    Rational bound;
    bool holds = false;  // value < bound, strictly
};

/// Geometric hypotheses of the degree-d criterion; checked only for presence.
struct KEAttestations {
    std::optional<Attestation> anticanonical_multiple;  // -K == a H
    std::optional<Attestation> branch_multiple;         // D == b H, D smooth and away from singular points
    std::optional<Attestation> local_orders;            // local groups of order at most d (or d' per point)
    std::optional<Attestation> special_line;            // line through all singular points with L == H / d

    bool complete() const;
};

struct KECertificate {
    std::string surface_name;
    std::string curve;
    Integer m;
    std::string rule;  // "degree-d criterion" or "elliptic log canonical criterion"
    Rational d, a, b;
    std::vector<Inequality> inequalities;
    KEAttestations attestations;
    KEVerdict verdict = KEVerdict::indeterminate;
};

/// v = d (a - (1 - 1/m) b) and b v, both required below 3/2; v > 0 is listed too.
KECertificate degree_criterion_certify(const Integer& d, const Rational& a, const Rational& b, const Integer& m,
                              const KEAttestations& att);

/// Du Val del Pezzo S with a smooth elliptic C in |-K|: positive for m >= 9.
KECertificate elliptic_criterion_certify(const Integer& m, const std::optional<Attestation>& elliptic_anticanonical);

/// (d, a, b) read off a Picard-rank-one catalog surface with hyperplane class = Pic generator.
struct DegreeData {
    Integer d;
    Rational a, b;
    Integer max_local_order;
};
DegreeData degree_data(const CatalogEntry& e, const std::string& curve);

/// Certificate for a catalog surface; conditions readable from the lattice are derived,
/// the rest attested for the surfaces where they are known.
KECertificate certify_catalog(const std::string& surface, const std::string& curve, const Integer& m);

enum class KltVerdict { klt, not_klt, indeterminate };
std::string to_string(KltVerdict v);

struct KltPoint {
    std::string label;
    bool singular = false;
    // smooth point: multiplicity of D; singular point: of the pullback to the local cover
    std::optional<Rational> multiplicity;
    // alternative for singular points: cover degree d' and (D . L) for a line through the point
    std::optional<Integer> cover_degree;
    std::optional<Rational> line_intersection;
    // alternative decomposition D = c C + D': coefficient c and local (C . D')
    std::optional<Rational> curve_coefficient;
    std::optional<Rational> local_intersection;
};

struct KltInput {
    std::vector<Rational> component_coefficients;
    std::vector<KltPoint> points;
};

struct KltReport {
    KltVerdict verdict = KltVerdict::indeterminate;
    std::vector<std::pair<std::string, KltVerdict>> per_point;
    std::string reason;
};

KltReport klt_point_predicates(const KltInput& in);

struct KEThreshold {
    std::string surface;
    std::string curve;
    Integer d;
    Rational a, b;
    std::optional<Integer> threshold;  // positive iff m > threshold
    std::vector<Integer> listed_m;     // individual values claimed positive
};

std::vector<KEThreshold> ke_threshold_catalog();

/// Least t with the certificate positive for every m > t within [2, m_max], or nullopt.
std::optional<Integer> derived_threshold(const Integer& d, const Rational& a, const Rational& b, long m_max);

}  // namespace seifert5
