public class S010 extends Abstract23 {
    public void open() {
        try {
            if (counter > 0) {
                switch (event) {
                    case EV1:
                        new S065();
                        break;
                    default:
                        new S002();
                        new S097();
                        break;
                }
            }
        } catch (IllegalStateException e) {
            send("msg3");
        } catch (TimeoutException e) {
            new S016();
            new S067();
        } finally {
            send("msg0");
        }
        send("msg2");
        try {
            send("msg1");
            send("msg6");
        } finally {
            send("msg4");
        }
    }

    public void close() {
        try {
            new S008();
            send("msg7");
        } finally {
            send("msg1");
            try {
                log("trace");
                send("msg2");
            } finally {
                send("msg2");
                send("msg4");
                update();
            }
        }
        log("trace");
        new S041();
    }

    public void start() {
        log("trace");
        update();
    }

    public void stop() {
        if (counter > 6) {
            new S048();
            send("msg0");
        } else {
            new S087();
        }
    }

    public void tick() {
        if (counter > 1) {
            send("msg6");
            if (counter > 9) {
                log("trace");
            } else {
                if (counter > 8) {
                    update();
                    update();
                } else {
                    send("msg5");
                    send("msg2");
                }
                send("msg2");
                switch (event) {
                    case EV5:
                        new S077();
                        update();
                        new S087();
                        break;
                    case EV4:
                        new S094();
                        new S080();
                        break;
                }
            }
            try {
                switch (event) {
                    case EV5:
                        send("msg3");
                        break;
                    case EV0:
                        update();
                        send("msg4");
                        send("msg5");
                        break;
                    default:
                        send("msg3");
                        new S058();
                        send("msg6");
                        break;
                }
                if (counter > 0) {
                    send("msg7");
                } else {
                    send("msg1");
                    new S057();
                }
            } catch (TimeoutException e) {
                if (counter > 4) {
                    new S032();
                } else {
                    update();
                }
            } catch (IllegalStateException e) {
                new S014();
            }
        }
        new S080();
    }

    public void reset() {
        new S012();
        try {
            log("trace");
            new S000();
        } catch (TimeoutException e) {
            send("msg7");
            new S032();
        } catch (IOException e) {
            send("msg0");
            send("msg6");
        } finally {
            new S010();
            switch (event) {
                case EV2:
                    switch (event) {
                        case EV0:
                            send("msg3");
                            new S066();
                            break;
                        case EV5:
                            new S063();
                            send("msg4");
                            break;
                    }
                    new S062();
                    send("msg7");
                    break;
                case EV4:
                    try {
                        new S062();
                        send("msg1");
                    } catch (TimeoutException e) {
                        send("msg4");
                        send("msg3");
                        new S001();
                    } finally {
                        new S012();
                        send("msg6");
                    }
                    update();
                    try {
                        new S008();
                        send("msg3");
                    } catch (IOException e) {
                        send("msg6");
                        send("msg5");
                        new S077();
                    }
                    break;
                case EV3:
                    try {
                        send("msg4");
                        new S017();
                        new S053();
                    } finally {
                        log("trace");
                        send("msg5");
                    }
                    break;
            }
        }
    }

    public void pause() {
        send("msg3");
        switch (event) {
            case EV2:
                send("msg3");
                switch (event) {
                    case EV1:
                        update();
                        log("trace");
                        new S022();
                        break;
                    case EV4:
                        new S013();
                        try {
                            update();
                        } catch (TimeoutException e) {
                            update();
                        }
                        break;
                    case EV0:
                        send("msg5");
                        if (counter > 8) {
                            send("msg7");
                            update();
                        }
                        break;
                }
                send("msg2");
                break;
        }
        new S048();
    }

    public void resume() {
        send("msg5");
        try {
            log("trace");
            if (counter > 9) {
                send("msg7");
            }
        } catch (TimeoutException e) {
            try {
                send("msg5");
            } finally {
                try {
                    log("trace");
                    update();
                } finally {
                    send("msg3");
                    send("msg3");
                    new S073();
                }
                new S001();
                try {
                    new S025();
                    send("msg7");
                    send("msg6");
                } catch (TimeoutException e) {
                    send("msg1");
                    send("msg5");
                    send("msg6");
                } catch (IOException e) {
                    send("msg7");
                    send("msg2");
                } finally {
                    send("msg1");
                }
            }
            switch (event) {
                case EV3:
                    new S083();
                    if (counter > 3) {
                        update();
                    }
                    break;
                case EV5:
                    update();
                    new S044();
                    break;
            }
            new S012();
        } catch (IOException e) {
            send("msg2");
            send("msg7");
        }
    }

    public void load() {
        new S041();
    }

    public void save() {
        try {
            new S027();
            send("msg3");
            if (counter > 8) {
                send("msg1");
                if (counter > 7) {
                    send("msg2");
                    new S027();
                }
            } else {
                new S091();
            }
        } catch (IOException e) {
            new S074();
        }
    }
}
