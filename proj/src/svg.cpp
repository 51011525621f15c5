#include "gitfan/svg.hpp"

#include <sstream>

namespace gitfan::svg {

std::string decimal(const Rational& x) {
  const Integer scale = 1000000;
  Integer num = abs(x.get_num()) * scale * 2 + x.get_den();
  Integer den = x.get_den() * 2;
  Integer q = num / den;  // round(|x| * 10^6)
  std::string digits = q.get_str();
  if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
  if (sgn(x) < 0 && q != 0) out.insert(0, "-");
  return out;
}

namespace {

std::string fill_for(const std::string& name) {
  if (name == "red") return "#e06666";
  if (name == "blue") return "#6fa8dc";
  return "#bbbbbb";
}

// The picture is drawn with y pointing up, so every y is negated.
std::string xy(const Point2& p) { return decimal(p.x) + "," + decimal(-p.y); }

}  // namespace

std::string chamber_svg(const WeightSystem& w, const std::vector<Highlight>& highlights,
                        const std::vector<Point2>& marks) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.5 -4.6 4.1 5.1\" "
        "width=\"410\" height=\"510\">\n";
  os << "<rect x=\"-0.5\" y=\"-4.6\" width=\"4.1\" height=\"5.1\" fill=\"white\"/>\n";
  for (const auto& h : highlights) {
    os << "<polygon class=\"chamber " << h.name << "\" points=\"";
    for (std::size_t k = 0; k < h.polygon.size(); ++k) os << (k ? " " : "") << xy(h.polygon[k]);
    os << "\" fill=\"" << fill_for(h.name) << "\" stroke=\"none\"/>\n";
  }
  for (const auto& [a, b] : configuration_lines(w)) {
    os << "<line x1=\"" << decimal(a.x) << "\" y1=\"" << decimal(-a.y) << "\" x2=\""
       << decimal(b.x) << "\" y2=\"" << decimal(-b.y)
       << "\" stroke=\"black\" stroke-width=\"0.01\"/>\n";
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& p = w.points()[i];
    os << "<circle class=\"point\" cx=\"" << decimal(p.x) << "\" cy=\"" << decimal(-p.y)
       << "\" r=\"0.04\" fill=\"black\"><title>" << w.labels()[i] << "</title></circle>\n";
  }
  for (const auto& p : marks) {
    os << "<circle class=\"mark\" cx=\"" << decimal(p.x) << "\" cy=\"" << decimal(-p.y)
       << "\" r=\"0.03\" fill=\"none\" stroke=\"#cc0000\" stroke-width=\"0.01\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace gitfan::svg
