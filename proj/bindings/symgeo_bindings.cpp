#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "symgeo/planner.hpp"

namespace py = pybind11;
using namespace symgeo;

namespace {

std::string repr_char4(const CharNum4& c) {
  std::ostringstream os;
  os << "CharNum4" << c;
  return os.str();
}

std::string repr_chern(const ChernTriple& c) {
  std::ostringstream os;
  os << "ChernTriple" << c;
  return os.str();
}

py::dict result_to_dict(const EvalResult& res) {
  py::dict d;
  d["dim"] = res.dim;
  if (res.char4) {
    d["e"] = res.char4->e;
    d["sigma"] = res.char4->sigma;
    d["c1sq"] = res.char4->c1_squared();
    if (res.char4->chi_h_defined()) d["chi_h"] = res.char4->chi_h();
    d["spin"] = res.char4->spin;
  }
  if (res.chern) {
    d["c13"] = res.chern->c13;
    d["c1c2"] = res.chern->c1c2;
    d["c3"] = res.chern->c3;
  }
  d["pi1"] = print_presentation(res.pi1);
  AbelianInvariants inv = abelianization(res.pi1);
  d["pi1_free_rank"] = inv.free_rank;
  d["pi1_torsion"] = inv.torsion;
  d["pi1_verified"] = res.pi1_verified;
  return d;
}

py::dict block_to_dict(const BlockDescriptor& b) {
  py::dict d;
  d["id"] = b.id;
  d["e"] = b.char4.e;
  d["sigma"] = b.char4.sigma;
  d["c1sq"] = b.char4.c1_squared();
  d["spin"] = b.char4.spin;
  d["pi1"] = print_presentation(b.pi1);
  d["submanifolds"] = static_cast<int>(b.submanifolds.size());
  d["provenance"] = b.provenance;
  return d;
}

WFamily wfamily(int i) {
  if (i < 0 || i > 2) throw DomainError("W family index must be 0, 1 or 2");
  return static_cast<WFamily>(i);
}

YFamily yfamily(int i) {
  if (i < 0 || i > 2) throw DomainError("Y family index must be 0, 1 or 2");
  return static_cast<YFamily>(i);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "characteristic-number calculus for symplectic sum constructions";

  py::register_exception<Error>(m, "Error");

  py::class_<CharNum4>(m, "CharNum4")
      .def(py::init([](Int e, Int sigma, bool spin) {
             return CharNum4{e, sigma, spin};
           }),
           py::arg("e"), py::arg("sigma"), py::arg("spin") = false)
      .def_readonly("e", &CharNum4::e)
      .def_readonly("sigma", &CharNum4::sigma)
      .def_readonly("spin", &CharNum4::spin)
      .def("c1_squared", &CharNum4::c1_squared)
      .def("c2", &CharNum4::c2)
      .def("chi_h", &CharNum4::chi_h)
      .def("chi_h_defined", &CharNum4::chi_h_defined)
      .def("__eq__",
           [](const CharNum4& a, const CharNum4& b) { return a == b; })
      .def("__repr__", &repr_char4);

  py::class_<ChernTriple>(m, "ChernTriple")
      .def(py::init([](Int c13, Int c1c2, Int c3) {
             return ChernTriple{c13, c1c2, c3};
           }),
           py::arg("c13"), py::arg("c1c2"), py::arg("c3"))
      .def_readonly("c13", &ChernTriple::c13)
      .def_readonly("c1c2", &ChernTriple::c1c2)
      .def_readonly("c3", &ChernTriple::c3)
      .def("__eq__",
           [](const ChernTriple& a, const ChernTriple& b) { return a == b; })
      .def("__repr__", &repr_chern);

  // 4- and 6-dimensional arithmetic.
  m.def(
      "sum4",
      [](const CharNum4& x, const CharNum4& y, Int genus) {
        return sum4(x, y, SurfaceGenus(genus));
      },
      py::arg("x"), py::arg("y"), py::arg("genus"));
  m.def("luttinger", &luttinger, py::arg("x"));
  m.def(
      "product_with_surface",
      [](const CharNum4& y, Int genus) {
        return product_with_surface(y, SurfaceGenus(genus));
      },
      py::arg("y"), py::arg("genus"));
  m.def("blow_up_point", &blow_up_point, py::arg("x"));
  m.def(
      "blow_up_surface",
      [](const ChernTriple& x, Int genus, Int pairing) {
        return blow_up_surface(x, SurfaceGenus(genus), pairing);
      },
      py::arg("x"), py::arg("genus"), py::arg("pairing"));
  m.def(
      "sum6",
      [](const ChernTriple& x, const ChernTriple& y, Int locus_genus,
         Int factor_genus) {
        return sum6(x, y, surface_product_fiber(SurfaceGenus(locus_genus),
                                                SurfaceGenus(factor_genus)));
      },
      py::arg("x"), py::arg("y"), py::arg("locus_genus"),
      py::arg("factor_genus"));

  // Finitely presented groups, at the text-format boundary.
  m.def(
      "abelianization",
      [](const std::string& text) {
        AbelianInvariants inv = abelianization(parse_presentation(text));
        return py::make_tuple(inv.free_rank, inv.torsion);
      },
      py::arg("presentation"),
      "H1 as (free_rank, torsion divisibility chain)");
  m.def(
      "count_homs_to_sym",
      [](const std::string& text, int n) {
        return count_homs_to_sym(parse_presentation(text), n);
      },
      py::arg("presentation"), py::arg("n"));
  m.def(
      "tietze_simplify",
      [](const std::string& text, int budget) {
        return print_presentation(
            tietze_simplify(parse_presentation(text), budget));
      },
      py::arg("presentation"), py::arg("budget") = 64);
  m.def(
      "free_product",
      [](const std::string& a, const std::string& b) {
        return print_presentation(
            free_product(parse_presentation(a), parse_presentation(b)));
      },
      py::arg("a"), py::arg("b"));

  // Registry.
  m.def("block_ids", [] {
    std::vector<std::string> ids;
    for (const BlockDescriptor& b : default_registry().all())
      ids.push_back(b.id);
    return ids;
  });
  m.def(
      "lookup_block",
      [](const std::string& id) {
        return block_to_dict(default_registry().lookup(id));
      },
      py::arg("id"));
  m.def(
      "bk_block",
      [](const std::string& group) {
        Presentation p = parse_presentation(group);
        return block_to_dict(bk_block(p.ngens(), p.nrelators(), p));
      },
      py::arg("group"));
  m.def(
      "geography_block",
      [](Int e, Int sigma, const std::string& variant) {
        GeographyVariant v = variant == "Z12" ? GeographyVariant::Z12
                                              : GeographyVariant::Z11;
        return block_to_dict(geography_block(e, sigma, v));
      },
      py::arg("e"), py::arg("sigma"), py::arg("variant") = "Z11");
  m.def(
      "spin_block",
      [](Int n, Int s) { return block_to_dict(spin_block(n, s)); },
      py::arg("n"), py::arg("s"));

  // Recipes.
  m.def(
      "evaluate_recipe",
      [](const std::string& json_text) {
        Recipe r = recipe_from_json(json_text);
        return result_to_dict(evaluate(r, default_registry()));
      },
      py::arg("recipe_json"));
  m.def(
      "recipe_to_dot",
      [](const std::string& json_text) {
        return to_dot(recipe_from_json(json_text), default_registry());
      },
      py::arg("recipe_json"));
  m.def(
      "closed_form_w",
      [](int family, Int e1, Int s1, Int e2, Int s2) {
        return closed_form_w(wfamily(family), e1, s1, e2, s2);
      },
      py::arg("family"), py::arg("e1"), py::arg("sigma1"), py::arg("e2"),
      py::arg("sigma2"));
  m.def(
      "closed_form_y",
      [](int family, Int n1, Int s1, Int n2, Int s2) {
        return closed_form_y(yfamily(family), n1, s1, n2, s2);
      },
      py::arg("family"), py::arg("n1"), py::arg("s1"), py::arg("n2"),
      py::arg("s2"));
  m.def(
      "closed_form_w_groups",
      [](int family, Int e1, Int s1, Int e2, Int s2, Int g, Int r,
         bool trailing_minus8) {
        return closed_form_w_groups(wfamily(family), e1, s1, e2, s2, g, r,
                                    trailing_minus8
                                        ? C3Variant::with_minus8
                                        : C3Variant::without_minus8);
      },
      py::arg("family"), py::arg("e1"), py::arg("sigma1"), py::arg("e2"),
      py::arg("sigma2"), py::arg("g"), py::arg("r"),
      py::arg("trailing_minus8") = true);
  m.def(
      "w_pipeline",
      [](int family, Int e1, Int s1, Int e2, Int s2,
         const std::string& group) {
        return recipe_to_json(make_w_pipeline(wfamily(family), e1, s1, e2, s2,
                                              parse_presentation(group)));
      },
      py::arg("family"), py::arg("e1"), py::arg("sigma1"), py::arg("e2"),
      py::arg("sigma2"), py::arg("group") = "");

  // Planner.
  m.def(
      "solve_budget",
      [](Int d13, Int d3) {
        BlowUpBudget b = solve_budget(d13, d3);
        return py::make_tuple(b.p, b.r_e, b.z);
      },
      py::arg("delta_c13"), py::arg("delta_c3"));
  m.def(
      "enumerate_region_4d",
      [](Int chi_lo, Int chi_hi, Int g, Int r, bool spin) {
        py::list out;
        for (const GeographyPoint& p :
             enumerate_region_4d(chi_lo, chi_hi, g, r, spin)) {
          py::dict d;
          d["c1sq"] = p.c1sq;
          d["chi_h"] = p.chi_h;
          d["c1sq_printed"] = p.c1sq_printed;
          if (spin) {
            d["n"] = p.n;
            d["s"] = p.s;
          } else {
            d["e"] = p.e;
            d["sigma"] = p.sigma;
          }
          out.append(d);
        }
        return out;
      },
      py::arg("chi_lo"), py::arg("chi_hi"), py::arg("g") = 0, py::arg("r") = 0,
      py::arg("spin") = false);
  m.def(
      "realize",
      [](Int c13, Int c1c2, Int c3, const std::string& group) {
        Target6 t{c13, c1c2, c3, parse_presentation(group)};
        return recipe_to_json(realize(t, default_registry()));
      },
      py::arg("c13"), py::arg("c1c2"), py::arg("c3"), py::arg("group") = "",
      "Recipe JSON whose evaluation hits the target Chern triple exactly");
  m.def(
      "realize_4d",
      [](Int c1sq, Int chi_h, const std::string& group, bool spin) {
        return recipe_to_json(
            realize_4d(c1sq, chi_h, parse_presentation(group), spin));
      },
      py::arg("c1sq"), py::arg("chi_h"), py::arg("group") = "",
      py::arg("spin") = false);

#ifdef SYMGEO_VERSION
  m.attr("__version__") = SYMGEO_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
