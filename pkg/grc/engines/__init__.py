"""Recompression and text RePair engines"""
