#include "gridfree/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridfree {

PointSet::PointSet(std::vector<Point> pts, std::optional<GridSpec> bound)
    : pts_(std::move(pts)), bound_(bound) {
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
    if (bound_) {
        for (const Point& p : pts_) {
            if (!bound_->contains(p)) {
                throw std::invalid_argument("point (" + std::to_string(p.x) + ", " +
                                            std::to_string(p.y) + ") outside grid of side " +
                                            std::to_string(bound_->n));
            }
        }
    }
    index_.reserve(pts_.size() * 2 + 1);
    index_.insert(pts_.begin(), pts_.end());
}

std::vector<Point> canonical_order(const PointSet& ps) { return ps.points(); }

int ConfigClass::arity() const {
    switch (kind) {
        case ConfigKind::Collinear:
            return k;
        case ConfigKind::Corner:
        case ConfigKind::IsoscelesTriangle:
        case ConfigKind::IsoscelesRightTriangle:
            return 3;
        default:
            return 4;
    }
}

ConfigClass ConfigClass::collinear(int k) {
    if (k != 3 && k != 4) throw std::invalid_argument("collinear arity must be 3 or 4");
    ConfigClass c;
    c.kind = ConfigKind::Collinear;
    c.k = k;
    return c;
}

ConfigClass ConfigClass::parallelogram(bool allow_degenerate) {
    ConfigClass c;
    c.kind = ConfigKind::Parallelogram;
    c.allow_degenerate = allow_degenerate;
    return c;
}

ConfigClass ConfigClass::rhombus() { return {ConfigKind::Rhombus}; }

ConfigClass ConfigClass::axis_kite(bool allow_flat) {
    ConfigClass c;
    c.kind = ConfigKind::AxisKite;
    c.allow_flat = allow_flat;
    return c;
}

ConfigClass ConfigClass::axis_square() { return {ConfigKind::AxisSquare}; }
ConfigClass ConfigClass::square() { return {ConfigKind::Square}; }
ConfigClass ConfigClass::axis_rectangle() { return {ConfigKind::AxisRectangle}; }

ConfigClass ConfigClass::isosceles(bool allow_flat) {
    ConfigClass c;
    c.kind = ConfigKind::IsoscelesTriangle;
    c.allow_flat = allow_flat;
    return c;
}

ConfigClass ConfigClass::corner() { return {ConfigKind::Corner}; }
ConfigClass ConfigClass::iso_right() { return {ConfigKind::IsoscelesRightTriangle}; }
ConfigClass ConfigClass::concyclic4() { return {ConfigKind::Concyclic4}; }

ConfigClass ConfigClass::axis_iso_trapezoid(bool include_equal_sides) {
    ConfigClass c;
    c.kind = ConfigKind::AxisIsoTrapezoid;
    c.include_equal_sides = include_equal_sides;
    return c;
}

std::string ConfigClass::name() const {
    switch (kind) {
        case ConfigKind::Collinear:
            return std::to_string(k) + "-collinear";
        case ConfigKind::Parallelogram:
            return allow_degenerate ? "parallelogram" : "nd-parallelogram";
        case ConfigKind::Rhombus:
            return "rhombus";
        case ConfigKind::AxisKite:
            return allow_flat ? "axis-kite" : "axis-kite-nonflat";
        case ConfigKind::AxisSquare:
            return "axis-square";
        case ConfigKind::Square:
            return "square";
        case ConfigKind::AxisRectangle:
            return "axis-rectangle";
        case ConfigKind::IsoscelesTriangle:
            return allow_flat ? "isosceles" : "isosceles-nonflat";
        case ConfigKind::Corner:
            return "corner";
        case ConfigKind::IsoscelesRightTriangle:
            return "iso-right";
        case ConfigKind::Concyclic4:
            return "concyclic";
        case ConfigKind::AxisIsoTrapezoid:
            return include_equal_sides ? "axis-iso-trapezoid-eq" : "axis-iso-trapezoid";
    }
    return "?";
}

std::optional<ConfigClass> ConfigClass::parse(const std::string& name) {
    for (const ConfigClass& c : all_variants()) {
        if (c.name() == name) return c;
    }
    return std::nullopt;
}

std::vector<ConfigClass> ConfigClass::all_variants() {
    return {
        collinear(3),
        collinear(4),
        parallelogram(true),
        parallelogram(false),
        rhombus(),
        axis_kite(true),
        axis_kite(false),
        axis_square(),
        square(),
        axis_rectangle(),
        isosceles(true),
        isosceles(false),
        corner(),
        iso_right(),
        concyclic4(),
        axis_iso_trapezoid(false),
        axis_iso_trapezoid(true),
    };
}

}  // namespace gridfree
