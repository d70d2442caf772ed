#include "cosphere/mesh_export.hpp"

#include <fstream>

namespace cosphere {

namespace {

std::string coord(const ExactScalar& v) { return to_decimal_string(v, 30); }

void write_sidecar(const std::string& path, const std::vector<ClassifiedCell>& cells) {
  std::ofstream csv(path);
  if (!csv) throw std::invalid_argument("export: cannot write " + path);
  csv << "cell,element,vertices,faces\n";
  for (std::size_t i = 0; i < cells.size(); ++i)
    csv << i << ',' << cells[i].group << ',' << cells[i].cell.vertices.size() << ','
        << cells[i].cell.faces.size() << '\n';
}

}  // namespace

void export_mesh(const std::vector<Point3>& points,
                 const std::vector<ClassifiedCell>& cells, MeshFormat format,
                 const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("export: cannot write " + path);
  std::size_t nfaces = 0;
  for (const ClassifiedCell& c : cells) nfaces += c.cell.faces.size();

  if (format == MeshFormat::kOff) {
    out << "OFF\n" << points.size() << ' ' << nfaces << " 0\n";
    for (const Point3& p : points)
      out << coord(p.x) << ' ' << coord(p.y) << ' ' << coord(p.z) << '\n';
    for (const ClassifiedCell& c : cells)
      for (const auto& f : c.cell.faces) {
        out << f.size();
        for (int v : f) out << ' ' << v;
        out << '\n';
      }
  } else {
    out << "# vtk DataFile Version 3.0\n";
    out << "co-spherical tessellation\n";
    out << "ASCII\nDATASET UNSTRUCTURED_GRID\n";
    out << "POINTS " << points.size() << " double\n";
    for (const Point3& p : points)
      out << coord(p.x) << ' ' << coord(p.y) << ' ' << coord(p.z) << '\n';
    std::size_t stream = 0;
    for (const ClassifiedCell& c : cells)
      for (const auto& f : c.cell.faces) stream += f.size() + 1;
    out << "CELLS " << nfaces << ' ' << stream << '\n';
    for (const ClassifiedCell& c : cells)
      for (const auto& f : c.cell.faces) {
        out << f.size();
        for (int v : f) out << ' ' << v;
        out << '\n';
      }
    out << "CELL_TYPES " << nfaces << '\n';
    for (std::size_t i = 0; i < nfaces; ++i) out << "7\n";  // VTK_POLYGON
    out << "CELL_DATA " << nfaces << '\n';
    out << "SCALARS cell_id int 1\nLOOKUP_TABLE default\n";
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t f = 0; f < cells[i].cell.faces.size(); ++f) out << i << '\n';
  }
  write_sidecar(path + ".cells.csv", cells);
}

}  // namespace cosphere
