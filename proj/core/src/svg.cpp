#include "msmcts/svg.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "msmcts/error.hpp"

namespace msmcts {

namespace {

constexpr double kScale = 20.0;  // pixels per workspace unit
constexpr double kMargin = 1.0;  // workspace units around the drawing

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

class Canvas {
 public:
  explicit Canvas(const Scene& scene)
      : min_y_(std::min(0.0, scene.robot_home.y) - kMargin),
        max_y_(scene.workspace.depth + kMargin),
        min_x_(std::min(0.0, scene.robot_home.x) - kMargin),
        max_x_(std::max(scene.workspace.width, scene.robot_home.x) + kMargin) {
    out_.precision(6);
    out_ << std::fixed;
  }

  double width() const { return (max_x_ - min_x_) * kScale; }
  double height() const { return (max_y_ - min_y_) * kScale; }
  // SVG y grows downward; flip so the opening sits at the bottom.
  double sx(double x) const { return (x - min_x_) * kScale; }
  double sy(double y) const { return (max_y_ - y) * kScale; }

  std::ostringstream& out() { return out_; }

 private:
  double min_y_, max_y_, min_x_, max_x_;
  std::ostringstream out_;
};

void tunnel_polygon(Canvas& c, const Tunnel& t, const char* fill) {
  const Point a = t.axis();
  const Point nrm = t.normal();
  const double hw = 0.5 * t.width();
  const std::array<Point, 4> corners{t.anchor() + nrm * -hw, t.anchor() + a * t.length() + nrm * -hw,
                                     t.anchor() + a * t.length() + nrm * hw,
                                     t.anchor() + nrm * hw};
  c.out() << "  <polygon points=\"";
  for (std::size_t i = 0; i < corners.size(); ++i) {
    if (i) c.out() << ' ';
    c.out() << c.sx(corners[i].x) << ',' << c.sy(corners[i].y);
  }
  c.out() << "\" fill=\"" << fill << "\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
}

}  // namespace

std::string render_svg(const Scene& scene, const Plan& plan) {
  if (const auto check = validate_plan(scene, plan); !check.valid) {
    throw Error(ErrorCode::kInvalidPlan, "cannot render: " + check.reason);
  }
  Canvas c(scene);
  auto& o = c.out();
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << c.width()
    << "\" height=\"" << c.height() << "\" viewBox=\"0 0 " << c.width() << ' ' << c.height()
    << "\">\n"
    << "  <defs>\n"
    << "    <marker id=\"arrowhead\" markerWidth=\"8\" markerHeight=\"6\" refX=\"8\" refY=\"3\" "
       "orient=\"auto\"><polygon points=\"0 0, 8 3, 0 6\" fill=\"#333333\"/></marker>\n"
    << "  </defs>\n";

  o << "  <rect id=\"workspace\" x=\"" << c.sx(0.0) << "\" y=\"" << c.sy(scene.workspace.depth)
    << "\" width=\"" << scene.workspace.width * kScale << "\" height=\""
    << scene.workspace.depth * kScale << "\" fill=\"#fafafa\" stroke=\"#000000\"/>\n";

  if (!plan.actions.empty()) {
    const SweptVolume sweep = swept_volume(scene, plan.actions.front());
    tunnel_polygon(c, sweep.pick, "#1f4fff");
    tunnel_polygon(c, sweep.place, "#ff1f1f");
  }

  const double r = scene.object_radius * kScale;
  for (std::size_t i = 0; i < scene.goal.size(); ++i) {
    o << "  <circle class=\"goal\" cx=\"" << c.sx(scene.goal[i].x) << "\" cy=\""
      << c.sy(scene.goal[i].y) << "\" r=\"" << r << "\" fill=\"none\" stroke=\""
      << kPalette[i % kPalette.size()] << "\" stroke-width=\"2\" stroke-dasharray=\"4 2\"/>\n";
  }
  for (std::size_t i = 0; i < scene.start.size(); ++i) {
    o << "  <circle class=\"start\" cx=\"" << c.sx(scene.start[i].x) << "\" cy=\""
      << c.sy(scene.start[i].y) << "\" r=\"" << r << "\" fill=\""
      << kPalette[i % kPalette.size()] << "\"/>\n";
    o << "  <text x=\"" << c.sx(scene.start[i].x) << "\" y=\"" << c.sy(scene.start[i].y) + 4.0
      << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#ffffff\">o" << i << "</text>\n";
  }

  for (std::size_t k = 0; k < plan.actions.size(); ++k) {
    const Action& a = plan.actions[k];
    o << "  <line class=\"move\" x1=\"" << c.sx(a.from.x) << "\" y1=\"" << c.sy(a.from.y)
      << "\" x2=\"" << c.sx(a.to.x) << "\" y2=\"" << c.sy(a.to.y) << "\" stroke=\""
      << kPalette[a.object % kPalette.size()]
      << "\" stroke-width=\"2\" marker-end=\"url(#arrowhead)\"/>\n";
    const Point mid = (a.from + a.to) * 0.5;
    o << "  <text class=\"step\" x=\"" << c.sx(mid.x) << "\" y=\"" << c.sy(mid.y) - 3.0
      << "\" font-size=\"12\" text-anchor=\"middle\" fill=\"#000000\">" << k + 1 << "</text>\n";
  }

  o << "  <circle id=\"robot-home\" cx=\"" << c.sx(scene.robot_home.x) << "\" cy=\""
    << c.sy(scene.robot_home.y) << "\" r=\"4\" fill=\"#000000\"/>\n"
    << "</svg>\n";
  return o.str();
}

}  // namespace msmcts
