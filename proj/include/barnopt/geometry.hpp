#pragma once

namespace barn {

/// One barn-type design: rectangular footprint W x L, wall height H and a
/// symmetric gable roof pitched at alpha (radians) over the width.
struct HouseParams {
  double width = 0.0;
  double length = 0.0;
  double height = 0.0;
  double alpha = 0.0;
};

/// Dimensionless shape of a design: r = L/W, k = H/W.
struct ShapeRatios {
  double r = 0.0;
  double k = 0.0;
  double alpha = 0.0;
};

/// External envelope split by face group. The ground slab is not part of it.
struct EnvelopeBreakdown {
  double walls_long = 0.0;   // 2 L H
  double walls_short = 0.0;  // 2 W H
  double roof = 0.0;         // L W / cos(alpha)
  double gables = 0.0;       // W^2 tan(alpha) / 2
  double total = 0.0;
};

void validate(const HouseParams& p);
void validate(const ShapeRatios& s);

/// Habitable volume W L H (the attic is not counted).
double volume(const HouseParams& p);

/// Floor area W L.
double floor_area(const HouseParams& p);

EnvelopeBreakdown surface(const HouseParams& p);

ShapeRatios ratios_from_params(const HouseParams& p);

/// Dimensions of the design with shape `s` enclosing `volume`:
/// W = (V / (r k))^(1/3), L = r W, H = k W.
HouseParams params_from_ratios(const ShapeRatios& s, double volume);

/// Shape factor with S = V^(2/3) * gamma(r, k) at fixed alpha.
double gamma(const ShapeRatios& s);

/// Uniform scaling of the three lengths; alpha is unchanged.
HouseParams scaled(const HouseParams& p, double factor);

}  // namespace barn
