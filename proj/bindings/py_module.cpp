#include <pybind11/pybind11.h>
PYBIND11_MODULE(_pflab, m) { m.doc() = "pflab core"; }
