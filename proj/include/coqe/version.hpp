#ifndef COQE_VERSION_HPP
#define COQE_VERSION_HPP

namespace coqe {

inline constexpr const char* kVersion = "0.1.0";

/// One-line statement of the component conventions every report carries.
inline constexpr const char* kRiemannConvention =
    "R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb} + Gamma^a_{ce} Gamma^e_{db}"
    " - Gamma^a_{de} Gamma^e_{cb}; R_{abcd} = g_{ae} R^e_{bcd}; S_{bd} = R^a_{bad}";

}  // namespace coqe

#endif  // COQE_VERSION_HPP
