"""Toolkit services"""
