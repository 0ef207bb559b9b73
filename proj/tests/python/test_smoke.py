import pflab
