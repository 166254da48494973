# UI Package: command line, grid and SVG output
