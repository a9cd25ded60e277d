"""Shared validators and helpers"""
