# Utils Package: logging, configuration and formatting
