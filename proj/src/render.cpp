#include "netmaint/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace netmaint {

namespace {

Rational overlap(const Interval& iv, const Rational& a, const Rational& b) {
  const Rational lo = std::max(iv.start, a);
  const Rational hi = std::min(iv.end, b);
  return lo < hi ? Rational(hi - lo) : Rational(0);
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_gantt_text(const Instance& instance, const Schedule& schedule,
                              const ConnectivityProfile& profile, int columns) {
  std::size_t label_width = std::string("connected").size();
  for (const Edge& e : instance.edges) label_width = std::max(label_width, e.id.size());

  std::ostringstream out;
  const Rational horizon = instance.horizon;
  auto cell = [&](int c) {
    return std::make_pair(horizon * c / columns, horizon * (c + 1) / columns);
  };

  out << std::left << std::setw(static_cast<int>(label_width)) << "" << " |0"
      << std::string(std::max(0, columns - 1 - static_cast<int>(to_string(horizon).size())), ' ')
      << to_string(horizon) << "\n";
  for (const Edge& e : instance.edges) {
    out << std::left << std::setw(static_cast<int>(label_width)) << e.id << " |";
    const auto it = schedule.find(e.id);
    for (int c = 0; c < columns; ++c) {
      const auto [a, b] = cell(c);
      bool busy = false;
      if (horizon > 0 && it != schedule.end()) {
        for (const Interval& iv : it->second) busy = busy || overlap(iv, a, b) > 0;
      }
      out << (busy ? '#' : '.');
    }
    out << "|\n";
  }
  out << std::left << std::setw(static_cast<int>(label_width)) << "connected" << " |";
  for (int c = 0; c < columns; ++c) {
    const auto [a, b] = cell(c);
    Rational up = 0;
    Rational down = 0;
    for (const Atom& atom : profile.atoms) (atom.connected ? up : down) += overlap(atom.span, a, b);
    out << (down == 0 ? '=' : up == 0 ? ' ' : '~');
  }
  out << "|\n\n";
  for (const Atom& atom : profile.atoms) {
    out << "[" << to_string(atom.span.start) << ", " << to_string(atom.span.end) << "] "
        << (atom.connected ? "connected" : "disconnected") << "\n";
  }
  out << "connected time " << to_string(profile.connected_time) << ", disconnected time "
      << to_string(profile.disconnected_time) << "\n";
  return out.str();
}

std::string render_svg(const Instance& instance, const Schedule& schedule,
                       const ConnectivityProfile& profile) {
  const double label = 120.0;
  const double plot = 720.0;
  const double row = 22.0;
  const double horizon = std::max(to_double(instance.horizon), 1e-9);
  const std::size_t rows = instance.edges.size() + 1;
  const double height = row * static_cast<double>(rows) + 30.0;
  auto x = [&](const Rational& t) { return label + plot * to_double(t) / horizon; };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << label + plot + 10
      << "\" height=\"" << height << "\" font-family=\"monospace\" font-size=\"12\">\n";
  for (std::size_t r = 0; r < instance.edges.size(); ++r) {
    const Edge& e = instance.edges[r];
    const double y = row * static_cast<double>(r) + 4;
    out << "  <text x=\"4\" y=\"" << y + 14 << "\">" << escape_xml(e.id) << "</text>\n";
    out << "  <rect x=\"" << x(e.release) << "\" y=\"" << y << "\" width=\""
        << x(e.deadline) - x(e.release) << "\" height=\"" << row - 6
        << "\" fill=\"#eeeeee\" stroke=\"#bbbbbb\"/>\n";
    const auto it = schedule.find(e.id);
    if (it == schedule.end()) continue;
    for (const Interval& iv : it->second) {
      out << "  <rect x=\"" << x(iv.start) << "\" y=\"" << y << "\" width=\""
          << x(iv.end) - x(iv.start) << "\" height=\"" << row - 6 << "\" fill=\"#c0392b\"/>\n";
    }
  }
  const double y = row * static_cast<double>(instance.edges.size()) + 4;
  out << "  <text x=\"4\" y=\"" << y + 14 << "\">connected</text>\n";
  for (const Atom& atom : profile.atoms) {
    out << "  <rect x=\"" << x(atom.span.start) << "\" y=\"" << y << "\" width=\""
        << x(atom.span.end) - x(atom.span.start) << "\" height=\"" << row - 6 << "\" fill=\""
        << (atom.connected ? "#27ae60" : "#7f8c8d") << "\"/>\n";
  }
  const double axis = y + row + 10;
  out << "  <text x=\"" << label << "\" y=\"" << axis << "\">0</text>\n";
  out << "  <text x=\"" << label + plot - 30 << "\" y=\"" << axis << "\">"
      << to_string(instance.horizon) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace netmaint
