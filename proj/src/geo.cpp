#include "leotopo/geo.hpp"

#include <algorithm>
#include <string>

#include "leotopo/errors.hpp"

namespace leotopo {

double normalize_longitude(double lon_deg) {
    double lon = std::fmod(lon_deg, 360.0);
    if (lon <= -180.0) lon += 360.0;
    if (lon > 180.0) lon -= 360.0;
    return lon;
}

GeoCoord geo_coord(double latitude_deg, double longitude_deg, double altitude_m) {
    if (!(latitude_deg >= -90.0 && latitude_deg <= 90.0)) {
        throw CoordinateRange("latitude out of range [-90, 90]: " + std::to_string(latitude_deg));
    }
    if (!(altitude_m >= 0.0)) {
        throw CoordinateRange("negative altitude: " + std::to_string(altitude_m));
    }
    if (!std::isfinite(longitude_deg)) {
        throw CoordinateRange("non-finite longitude");
    }
    return GeoCoord{latitude_deg, normalize_longitude(longitude_deg), altitude_m};
}

namespace {

CartesianPos unit_vector(const GeoCoord& c) {
    const double lat = deg2rad(c.latitude_deg);
    const double lon = deg2rad(c.longitude_deg);
    const double cl = std::cos(lat);
    return {cl * std::cos(lon), cl * std::sin(lon), std::sin(lat)};
}

}  // namespace

double geodesic_distance(const GeoCoord& a, const GeoCoord& b) {
    const CartesianPos u = unit_vector(a);
    const CartesianPos v = unit_vector(b);
    // atan2 form is stable for both tiny and near-antipodal separations.
    const double angle = std::atan2(cross(u, v).norm(), dot(u, v));
    return kEarthRadiusM * angle;
}

double geographic_angle_deg(const GeoCoord& a, const GeoCoord& b) {
    const CartesianPos u = unit_vector(a);
    const CartesianPos v = unit_vector(b);
    const CartesianPos n = cross(u, v);
    const double nn = n.norm();
    if (nn < 1e-12) {
        throw DegeneratePair("geographic angle undefined for identical or antipodal points");
    }
    const double c = std::clamp(std::abs(n.z_m) / nn, 0.0, 1.0);
    return rad2deg(std::acos(c));
}

CartesianPos surface_to_cartesian(const GeoCoord& c, double t_s) {
    const double r = kEarthRadiusM + c.altitude_m;
    const double lat = deg2rad(c.latitude_deg);
    const double lon = deg2rad(c.longitude_deg) + kEarthRotationRadS * t_s;
    const double cl = std::cos(lat);
    return {r * cl * std::cos(lon), r * cl * std::sin(lon), r * std::sin(lat)};
}

}  // namespace leotopo
