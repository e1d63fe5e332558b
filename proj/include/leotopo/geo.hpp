#pragma once

#include <cmath>

namespace leotopo {

// Spherical Earth model used throughout. Constants are fixed for a run and
// recorded in run manifests.
struct EarthModel {
    double radius_m = 6371000.0;
    double mu_m3s2 = 3.986004418e14;
    double rotation_rate_rad_s = 7.2921159e-5;
};

inline constexpr double kEarthRadiusM = 6371000.0;
inline constexpr double kEarthMuM3S2 = 3.986004418e14;
inline constexpr double kEarthRotationRadS = 7.2921159e-5;

constexpr EarthModel earth_model() { return EarthModel{}; }

inline double deg2rad(double deg) { return deg * (M_PI / 180.0); }
inline double rad2deg(double rad) { return rad * (180.0 / M_PI); }

// Surface or near-surface point. latitude in [-90, 90], longitude normalized
// to (-180, 180], altitude above the sphere in meters.
struct GeoCoord {
    double latitude_deg = 0.0;
    double longitude_deg = 0.0;
    double altitude_m = 0.0;
};

// Validating constructor: throws CoordinateRange for latitude outside
// [-90, 90] or negative altitude; longitude is normalized to (-180, 180].
GeoCoord geo_coord(double latitude_deg, double longitude_deg, double altitude_m = 0.0);

double normalize_longitude(double lon_deg);

// Earth-centered inertial position, z = north polar axis.
struct CartesianPos {
    double x_m = 0.0;
    double y_m = 0.0;
    double z_m = 0.0;

    double norm() const { return std::sqrt(x_m * x_m + y_m * y_m + z_m * z_m); }
};

inline CartesianPos operator-(const CartesianPos& a, const CartesianPos& b) {
    return {a.x_m - b.x_m, a.y_m - b.y_m, a.z_m - b.z_m};
}

inline double dot(const CartesianPos& a, const CartesianPos& b) {
    return a.x_m * b.x_m + a.y_m * b.y_m + a.z_m * b.z_m;
}

inline CartesianPos cross(const CartesianPos& a, const CartesianPos& b) {
    return {a.y_m * b.z_m - a.z_m * b.y_m,
            a.z_m * b.x_m - a.x_m * b.z_m,
            a.x_m * b.y_m - a.y_m * b.x_m};
}

inline double distance_m(const CartesianPos& a, const CartesianPos& b) {
    return (a - b).norm();
}

// Great-circle arc length between two surface points (altitudes ignored).
double geodesic_distance(const GeoCoord& a, const GeoCoord& b);

// Angle in [0, 90] degrees between the plane through both points and Earth's
// center and the equatorial plane. Symmetric in (a, b). Throws DegeneratePair
// for identical or antipodal points.
double geographic_angle_deg(const GeoCoord& a, const GeoCoord& b);

// Inertial position of a ground point at time t; the point co-rotates with
// Earth (eastward at rotation_rate_rad_s).
CartesianPos surface_to_cartesian(const GeoCoord& c, double t_s);

}  // namespace leotopo
