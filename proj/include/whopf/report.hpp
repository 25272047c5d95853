#pragma once

// JSON reports composed from the integral, group-like and trace machinery.

#include "whopf/error.hpp"
#include "whopf/grouplikes.hpp"
#include "whopf/io.hpp"
#include "whopf/semisimplicity.hpp"

namespace whopf {

struct ReportSections {
  bool integrals = false;
  bool grouplikes = false;
  bool radford = false;
  bool traces = false;
  bool dual = false;

  static ReportSections all() { return {true, true, true, true, true}; }
  bool none() const { return !integrals && !grouplikes && !radford && !traces && !dual; }
};

struct Report {
  json body;
  bool complete = true;  // false if some requested section raised an error
};

/// One object with the requested sections. A section that fails holds
/// {"error": code, "message": text} instead of its data. The dual section repeats the
/// other requested sections for H*.
template <class S>
Report build_report(const WeakHopfAlgebra<S>& h, const ReportSections& sections);

template <class S>
json integrals_json(const WeakHopfAlgebra<S>& h);

template <class S>
json distinguished_json(const WeakHopfAlgebra<S>& h);

template <class S>
json radford_json(const WeakHopfAlgebra<S>& h);

template <class S>
json traces_json(const WeakHopfAlgebra<S>& h);

template <class S>
json dynamical_report_json(const DynamicalReport<S>& r);

json error_json(const Error& e);

}  // namespace whopf
