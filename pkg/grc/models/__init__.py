"""Run records and configuration models"""
