"""Utility modules for USB File Transfer Tracker"""