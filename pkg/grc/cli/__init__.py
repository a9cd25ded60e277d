"""Command-line surface"""
