#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "t0form/cyclotomic.hpp"
#include "t0form/io.hpp"
#include "t0form/oracle.hpp"
#include "t0form/standard_form.hpp"
#include "t0form/standardize.hpp"

namespace py = pybind11;
using namespace t0form;

namespace {

using Rows = std::vector<std::vector<std::optional<long long>>>;

T0Matrix matrix_from_rows(int k, const Rows& rows) {
    std::size_t m = rows.size();
    std::size_t n = m == 0 ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != n) throw DimensionMismatch("ragged row lengths");
    T0Matrix out(k, m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rows[i][j]) out(i, j) = UnitEntry::unit(*rows[i][j], k);
    return out;
}

Rows matrix_to_rows(const T0Matrix& a) {
    Rows rows(a.num_rows(), std::vector<std::optional<long long>>(a.num_cols()));
    for (std::size_t i = 0; i < a.num_rows(); ++i)
        for (std::size_t j = 0; j < a.num_cols(); ++j)
            if (a(i, j).is_unit()) rows[i][j] = a(i, j).exponent();
    return rows;
}

OrderSpec order_from(int k, const std::optional<std::vector<int>>& exponents) {
    if (!exponents) return OrderSpec::default_order(k);
    std::vector<int> ranks(static_cast<std::size_t>(k), -1);
    int rank = 0;
    for (int e : *exponents) {
        if (e < 0 || e >= k || ranks[static_cast<std::size_t>(e)] != -1)
            throw MalformedOrder("order must list each exponent in [0, k) exactly once");
        ranks[static_cast<std::size_t>(e)] = rank++;
    }
    if (rank != k) throw MalformedOrder("order must list all k exponents");
    return OrderSpec(k, std::move(ranks));
}

py::object violations_to_list(const ViolationReport& report) {
    py::list out;
    for (const auto& v : report.violations)
        out.append(py::make_tuple(to_string(v.condition),
                                  v.row ? py::cast(*v.row) : py::none(),
                                  v.col ? py::cast(*v.col) : py::none(),
                                  format_entry(v.found)));
    return out;
}

}  // namespace

PYBIND11_MODULE(t0form, m) {
    m.doc() = "exact standard forms of matrices over roots of unity and zero, "
              "with monomial-equivalence certificates";

    py::class_<T0Matrix>(m, "T0Matrix")
        .def(py::init(&matrix_from_rows), py::arg("k"), py::arg("rows"),
             "rows: list of rows; each cell is None (zero) or a unit exponent")
        .def_property_readonly("k", &T0Matrix::k)
        .def_property_readonly("shape",
                               [](const T0Matrix& a) {
                                   return py::make_tuple(a.num_rows(), a.num_cols());
                               })
        .def("rows", &matrix_to_rows)
        .def("__eq__", [](const T0Matrix& a, const T0Matrix& b) { return a == b; })
        .def("__str__", &format_matrix)
        .def("__repr__", &format_matrix);

    py::class_<MonomialMatrix>(m, "MonomialMatrix")
        .def(py::init([](int k, std::vector<std::size_t> perm, std::vector<long long> exps) {
                 std::vector<UnitEntry> diag;
                 diag.reserve(exps.size());
                 for (long long e : exps) diag.push_back(UnitEntry::unit(e, k));
                 return MonomialMatrix(k, std::move(perm), std::move(diag));
             }),
             py::arg("k"), py::arg("perm"), py::arg("diag_exponents"))
        .def_static("identity", &MonomialMatrix::identity, py::arg("k"), py::arg("size"))
        .def_property_readonly("k", &MonomialMatrix::k)
        .def_property_readonly("size", &MonomialMatrix::size)
        .def_property_readonly("perm", [](const MonomialMatrix& m_) { return m_.perm(); })
        .def_property_readonly("diag_exponents",
                               [](const MonomialMatrix& m_) {
                                   std::vector<int> out;
                                   for (UnitEntry d : m_.diag()) out.push_back(d.exponent());
                                   return out;
                               })
        .def("to_dense", &MonomialMatrix::to_dense)
        .def("__eq__",
             [](const MonomialMatrix& a, const MonomialMatrix& b) { return a == b; });

    py::class_<Certificate>(m, "Certificate")
        .def_readonly("m1", &Certificate::m1)
        .def_readonly("m2", &Certificate::m2)
        .def("__str__", &format_certificate);

    py::class_<GramResult>(m, "GramResult")
        .def_property_readonly("weighing", [](const GramResult& r) { return r.weighing; })
        .def_property_readonly("weight", [](const GramResult& r) { return r.weight; })
        .def_property_readonly("witness", [](const GramResult& r) -> py::object {
            if (!r.witness) return py::none();
            const char* reason = r.witness->reason == GramFailure::not_square ? "not_square"
                                 : r.witness->reason == GramFailure::off_diagonal
                                     ? "off_diagonal"
                                     : "diagonal_mismatch";
            return py::make_tuple(reason, r.witness->row, r.witness->col,
                                  r.witness->value.to_string());
        });

    m.def("parse_matrix", &parse_matrix);
    m.def("format_matrix", &format_matrix);
    m.def("parse_certificate", &parse_certificate, py::arg("text"), py::arg("k"));
    m.def("format_certificate", &format_certificate);

    m.def(
        "standardize",
        [](const T0Matrix& w, const std::optional<std::vector<int>>& order) {
            StandardizeResult r = standardize(w, order_from(w.k(), order));
            return py::make_tuple(r.standard, r.cert);
        },
        py::arg("matrix"), py::arg("order") = py::none(),
        "returns (standard_form_matrix, certificate)");

    m.def(
        "legacy_standardize",
        [](const T0Matrix& w, const std::optional<std::vector<int>>& order) {
            LegacyResult r = legacy_standardize(w, order_from(w.k(), order));
            py::list stages;
            for (const auto& s : r.stage) stages.append(s);
            return py::make_tuple(stages, r.cert);
        },
        py::arg("matrix"), py::arg("order") = py::none(),
        "returns ([w1, w2, w3, w4], certificate); no standard-form guarantee");

    m.def(
        "is_standard_form",
        [](const T0Matrix& a, const std::optional<std::vector<int>>& order) {
            auto r = is_standard_form(order_from(a.k(), order), a);
            return py::make_tuple(r.standard, violations_to_list(r.report));
        },
        py::arg("matrix"), py::arg("order") = py::none(),
        "returns (bool, [(condition, row, col, entry), ...]) with 0-based locations");

    m.def("gram_weight_check", &gram_weight_check, py::arg("matrix"));

    m.def("equivalent_by", &equivalent_by, py::arg("a"), py::arg("b"), py::arg("m1"),
          py::arg("m2"));
    m.def("apply_row_transform", &apply_row_transform, py::arg("m1"), py::arg("a"));
    m.def("apply_col_transform", &apply_col_transform, py::arg("a"), py::arg("m2"));
    m.def("monomial_compose", &monomial_compose);
    m.def("monomial_inverse", &monomial_inverse);

    m.def(
        "brute_force_equivalent",
        [](const T0Matrix& a, const T0Matrix& b, std::size_t max_dim, int max_group_order,
           std::uint64_t max_steps) -> std::optional<Certificate> {
            OracleBudget budget{max_dim, max_group_order, max_steps};
            return brute_force_equivalent(a, b, budget);
        },
        py::arg("a"), py::arg("b"), py::arg("max_dim") = OracleBudget{}.max_dim,
        py::arg("max_group_order") = OracleBudget{}.max_group_order,
        py::arg("max_steps") = OracleBudget{}.max_steps,
        "exhaustive certificate search; None means not equivalent");

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
}
