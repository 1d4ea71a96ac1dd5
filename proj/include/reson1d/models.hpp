#ifndef RESON1D_MODELS_HPP
#define RESON1D_MODELS_HPP

#include "reson1d/core.hpp"

namespace reson1d {

// The three exactly solvable scattering geometries.
//
//   DeltaWall     V(x) = v0 delta(x + a), rigid wall at x = 0
//   ExpOnePiece   V(x) = v0 exp(2x/c)
//   ExpTwoPiece   V(x) = v0 exp(2x/c) for x <= 0, v0 exp(2x/d) for x > 0;
//                 c = 0 degenerates the left piece to free space (step limit)
enum class ModelKind { DeltaWall, ExpOnePiece, ExpTwoPiece };

struct ModelSpec {
    ModelKind kind;
    double v0 = 0.0;
    double a = 0.0;  // DeltaWall barrier offset
    double c = 0.0;  // left length scale
    double d = 0.0;  // right length scale (ExpTwoPiece)

    static ModelSpec delta_wall(double v0, double a);
    static ModelSpec exp_one_piece(double v0, double c);
    static ModelSpec exp_two_piece(double v0, double c, double d);

    const char* name() const;
};

// Dimensionless combinations entering the Bessel-function solutions:
// s_c = c sqrt(v0), s_d = d sqrt(v0), zeta = d/c (NaN when c = 0).
struct ScaleParams {
    double s_c;
    double s_d;
    double zeta;
};
ScaleParams scales(const ModelSpec& spec);

// Pointwise potential.  Throws NotPointwiseError for DeltaWall.
double potential_value(const ModelSpec& spec, double x);

// Closed-form reflection amplitudes, evaluated as analytic continuations in
// the complex momentum k.  On the real axis all three have |r| = 1.
Complex reflection_delta_wall(const ModelSpec& spec, Complex k);
Complex reflection_exp_one_piece(const ModelSpec& spec, Complex k);
Complex reflection_exp_two_piece(const ModelSpec& spec, Complex k);

// Kind dispatch.
Complex reflection(const ModelSpec& spec, Complex k);

// r at real energy E > 0 (k = sqrt(E)).
Complex reflection_at_energy(const ModelSpec& spec, double E);

// Analytic denominator D(k) of the reflection amplitude; its zeros in the
// lower half k-plane are the Gamow resonances.  For ExpOnePiece this is the
// (zero-free) Gamma(1 - ikc).
Complex pole_denominator(const ModelSpec& spec, Complex k);

}  // namespace reson1d

#endif
