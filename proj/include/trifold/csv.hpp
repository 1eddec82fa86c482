#pragma once

// CSV writers for the report types.  All floating-point fields print with 12
// significant digits so outputs are byte-stable across runs.

#include <cstdio>
#include <ostream>
#include <span>
#include <string>

#include "trifold/asymptotics.hpp"
#include "trifold/domain.hpp"
#include "trifold/extremal.hpp"
#include "trifold/inequalities.hpp"
#include "trifold/suffridge.hpp"
#include "trifold/univalence.hpp"

namespace trifold {

inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// header `segment,t,x,y`, one row per boundary sample
inline void write_domain_csv(std::ostream& os, const DomainBoundary& bd) {
    os << "segment,t,x,y\n";
    for (const BoundarySample& s : bd.samples)
        os << segment_name(s.kind) << ',' << fmt12(s.t) << ',' << fmt12(s.p.x) << ','
           << fmt12(s.p.y) << '\n';
}

inline void write_corner_csv(std::ostream& os, const CornerPoint& c) {
    os << "T,a,b\n" << c.fold_order << ',' << fmt12(c.a) << ',' << fmt12(c.b) << '\n';
}

inline void write_suffridge_csv(std::ostream& os, const SymmetricPolynomial& p) {
    os << "j,exponent,coefficient\n";
    for (int j = 1; j <= p.term_count(); ++j)
        os << j << ',' << p.exponent(j) << ',' << fmt12(p.coeff(j)) << '\n';
}

// rows `quantity,closed_form,oracle,abs_diff`
inline void write_extremal_csv(std::ostream& os, const ExtremalReport& rep) {
    os << "quantity,closed_form,oracle,abs_diff\n";
    auto row = [&os](const char* name, double cf, double oracle) {
        os << name << ',' << fmt12(cf) << ',' << fmt12(oracle) << ','
           << fmt12(std::abs(cf - oracle)) << '\n';
    };
    row("max_L1", rep.closed_form.max_l1, rep.oracle.max_l1.value);
    row("max_L2", rep.closed_form.max_l2, rep.oracle.max_l2.value);
    row("min_L3", rep.closed_form.min_l3, rep.oracle.min_l3.value);
}

// no header; an empty file means every inequality held
inline void write_lemma_violations_csv(std::ostream& os, const LemmaReport& rep) {
    for (const LemmaViolation& v : rep.violations)
        os << v.check << ',' << fmt12(v.p1) << ',' << fmt12(v.p2) << ',' << fmt12(v.lhs) << ','
           << fmt12(v.rhs) << '\n';
}

inline void write_asymptotics_csv(std::ostream& os, std::span<const AsymptoticSample> samples) {
    os << "T,n,ratio_cover,max_mod,normalized_cover,normalized_max\n";
    for (const AsymptoticSample& s : samples)
        os << s.fold_order << ',' << s.term_count << ',' << fmt12(s.ratio_cover) << ','
           << fmt12(s.max_mod) << ',' << fmt12(s.normalized_cover) << ','
           << fmt12(s.normalized_max) << '\n';
}

inline void write_univalence_csv(std::ostream& os, const UnivalenceReport& rep) {
    os << "verdict,min_derivative_root_modulus,min_boundary_self_distance,test_radius,samples\n"
       << verdict_name(rep.verdict) << ',' << fmt12(rep.min_derivative_root_modulus) << ','
       << fmt12(rep.min_boundary_self_distance) << ',' << fmt12(rep.test_radius) << ','
       << rep.boundary_samples << '\n';
}

}  // namespace trifold
