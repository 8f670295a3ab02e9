"""Core modules for USB File Transfer Tracker"""