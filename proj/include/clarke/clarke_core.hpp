#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace clarke {

inline constexpr double kPi = 3.14159265358979323846;

/// Tolerance for validating user-supplied inputs (geometry symmetry sums,
/// displacement constraint on external joint vectors).
inline constexpr double kInputTolerance = 1e-9;

/// Tolerance for closed-form identities that hold exactly up to rounding
/// (round trips, matrix products, constraint sums on computed outputs).
inline constexpr double kIdentityTolerance = 1e-12;

/// Wraps an angle to the half-open interval [-pi, pi).
double wrap_angle(double angle);

/// Rate/displacement 2-vector in the (rho_Re, rho_Im) plane. Used for
/// differences of Clarke coordinates and their time derivatives.
struct Vec2 {
    double re = 0.0;
    double im = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.re + b.re, a.im + b.im}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.re - b.re, a.im - b.im}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.re, s * v.im}; }
inline Vec2 operator*(Vec2 v, double s) { return {s * v.re, s * v.im}; }

double norm_inf(Vec2 v);
double norm_2(Vec2 v);

/**
 * Point on the 2-dof manifold of feasible joint displacements, expressed
 * in Clarke coordinates (rho_Re, rho_Im), in meters.
 */
struct ClarkeCoordinates {
    double re = 0.0;
    double im = 0.0;

    /// Euclidean modulus sqrt(re^2 + im^2), meters.
    double modulus() const;

    /// Two-argument arctangent in [-pi, pi). The zero vector maps to 0.
    double argument() const;
};

inline Vec2 operator-(ClarkeCoordinates a, ClarkeCoordinates b) {
    return {a.re - b.re, a.im - b.im};
}
inline ClarkeCoordinates operator+(ClarkeCoordinates c, Vec2 v) {
    return {c.re + v.re, c.im + v.im};
}

/**
 * Kinematic design parameters of one displacement-actuated segment:
 * joint count n, segment length l, pitch-circle radius d, and the angular
 * joint locations psi_i on the cross-section.
 *
 * Construction validates the symmetry conditions under which the Clarke
 * transformation matrix has the closed-form right-inverse:
 *   sum cos(psi) = sum sin(psi) = sum cos(psi)sin(psi) = 0,
 *   sum cos^2(psi) = sum sin^2(psi) = n/2,
 * each within 1e-9. Arbitrary symmetric layouts are accepted; equally
 * spaced joints (psi_i = 2*pi*i/n) are the common case.
 */
class RobotGeometry {
public:
    RobotGeometry(int joint_count, double segment_length, double pitch_radius,
                  std::vector<double> joint_angles);

    /// Geometry with n equally spaced joints, psi_i = 2*pi*i/n.
    static RobotGeometry equally_spaced(int joint_count, double segment_length,
                                        double pitch_radius);

    int joint_count() const { return n_; }
    double segment_length() const { return length_; }
    double pitch_radius() const { return pitch_radius_; }
    const std::vector<double>& joint_angles() const { return psi_; }

    // Cached trigonometric tables used by the transforms.
    const std::vector<double>& cos_angles() const { return cos_psi_; }
    const std::vector<double>& sin_angles() const { return sin_psi_; }

    bool operator==(const RobotGeometry& other) const;

private:
    int n_;
    double length_;
    double pitch_radius_;
    std::vector<double> psi_;
    std::vector<double> cos_psi_;
    std::vector<double> sin_psi_;
};

/**
 * Displacements of the n actuation joints, meters. Feasible vectors obey
 * the displacement constraint sum(rho_i) = 0; measured vectors may violate
 * it (the encoder projects the violation away).
 */
struct JointVector {
    std::vector<double> values;

    JointVector() = default;
    explicit JointVector(std::vector<double> v) : values(std::move(v)) {}
    static JointVector zeros(std::size_t n) { return JointVector(std::vector<double>(n, 0.0)); }

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }

    /// Residual of the displacement constraint, sum(rho_i).
    double sum() const;
    double norm_inf() const;
    double norm_2() const;
};

/// Constant-curvature arc parameters of one segment.
struct ArcParameters {
    double curvature = 0.0;      ///< kappa, 1/m
    double plane_angle = 0.0;    ///< bending-plane angle theta, rad, in [-pi, pi)
    double bending_angle = 0.0;  ///< phi = l * kappa, rad (equals the tip orientation)
};

/**
 * The generalized Clarke transformation matrix M_P (2 x n) together with
 * its right-inverse (n x 2). Rows of M_P are (2/n)cos(psi_i) and
 * (2/n)sin(psi_i); rows of the right-inverse are (cos(psi_i), sin(psi_i)).
 */
struct ClarkeMatrix {
    int n = 0;
    std::vector<double> forward_re;  ///< M_P row 0: (2/n) cos(psi_i)
    std::vector<double> forward_im;  ///< M_P row 1: (2/n) sin(psi_i)
    std::vector<double> inverse_re;  ///< right-inverse column 0: cos(psi_i)
    std::vector<double> inverse_im;  ///< right-inverse column 1: sin(psi_i)

    double forward(int row, int col) const;
    double inverse(int row, int col) const;

    /// M_P * M_P_inv as a row-major 2x2 array; identity up to rounding.
    std::array<double, 4> forward_times_inverse() const;

    ClarkeCoordinates apply_forward(const JointVector& rho) const;
    JointVector apply_inverse(const ClarkeCoordinates& coords) const;
};

/// Builds M_P and its right-inverse for a validated geometry.
ClarkeMatrix make_clarke_matrix(const RobotGeometry& geometry);

/**
 * Encoder: maps joint displacements onto Clarke coordinates,
 * rho_bar = M_P * rho. For vectors violating the displacement constraint
 * (e.g. noisy measurements) this is the projection onto the manifold.
 * Throws std::invalid_argument on dimension mismatch.
 */
ClarkeCoordinates joints_to_clarke(const JointVector& rho, const RobotGeometry& geometry);

/**
 * Decoder: reconstructs joint displacements from Clarke coordinates,
 * rho_i = rho_Re cos(psi_i) + rho_Im sin(psi_i). The output satisfies the
 * displacement constraint up to rounding.
 */
JointVector clarke_to_joints(const ClarkeCoordinates& coords, const RobotGeometry& geometry);

/// Modulus and argument of the Clarke coordinate vector; arg(0,0) = 0.
std::pair<double, double> clarke_modulus_argument(const ClarkeCoordinates& coords);

/// Arc parameters -> Clarke coordinates: (d*l*kappa*cos(theta), d*l*kappa*sin(theta)).
ClarkeCoordinates arc_to_clarke(const ArcParameters& arc, const RobotGeometry& geometry);

/// Clarke coordinates -> arc parameters: phi = |rho_bar|/d, kappa = phi/l,
/// theta = arg(rho_bar). The straight configuration maps to all zeros.
ArcParameters clarke_to_arc(const ClarkeCoordinates& coords, const RobotGeometry& geometry);

/**
 * Encoder-decoder transfer between robots of different geometry: encodes
 * joint values of the source robot into Clarke coordinates and decodes
 * them for the target robot. Both joint vectors represent the same point
 * on the manifold.
 */
JointVector interop_transfer(const JointVector& rho_source, const RobotGeometry& source,
                             const RobotGeometry& target);

}  // namespace clarke
