"""Version information for ballq-verify."""

# Version follows semantic versioning: MAJOR.MINOR.PATCH
# Update this single location to change version across the entire project
__version__ = "0.1.0"
