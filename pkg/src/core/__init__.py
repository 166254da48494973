# Core Package: catalog, field, solvers, flow and checks
