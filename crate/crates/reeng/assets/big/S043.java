public class S043 extends Abstract14 {
    public void open() {
        new S009();
        if (counter > 6) {
            try {
                send("msg6");
                send("msg4");
                send("msg1");
            } catch (IOException e) {
                send("msg2");
            } catch (TimeoutException e) {
                switch (event) {
                    case EV3:
                        new S064();
                        break;
                    default:
                        new Abstract2();
                        send("msg7");
                        break;
                }
                try {
                    send("msg6");
                } finally {
                    new S076();
                    log("trace");
                }
            } finally {
                update();
                switch (event) {
                    case EV2:
                        log("trace");
                        break;
                    default:
                        log("trace");
                        send("msg0");
                        new S025();
                        break;
                }
            }
            if (counter > 5) {
                send("msg1");
                new S058();
                if (counter > 9) {
                    send("msg3");
                } else {
                    new S047();
                    send("msg7");
                    log("trace");
                }
            } else {
                new S031();
            }
            try {
                try {
                    send("msg1");
                } catch (IOException e) {
                    update();
                    send("msg6");
                } catch (IllegalStateException e) {
                    update();
                    send("msg2");
                }
                update();
            } catch (IOException e) {
                log("trace");
                log("trace");
                send("msg6");
            } catch (TimeoutException e) {
                send("msg4");
                send("msg0");
                new Abstract6();
            }
        } else {
            new S061();
            try {
                new S001();
            } catch (IllegalStateException e) {
                switch (event) {
                    case EV5:
                        update();
                        send("msg5");
                        break;
                    case EV3:
                        send("msg4");
                        break;
                }
            } finally {
                send("msg4");
            }
        }
    }

    public void close() {
        new S049();
        new S019();
    }

    public void start() {
        try {
            log("trace");
            send("msg7");
        } catch (TimeoutException e) {
            send("msg0");
        } finally {
            send("msg5");
        }
        send("msg2");
        try {
            send("msg1");
        } catch (IllegalStateException e) {
            new S065();
            new S012();
        } catch (TimeoutException e) {
            if (counter > 5) {
                send("msg4");
                log("trace");
                send("msg6");
            } else {
                try {
                    new S036();
                } catch (IllegalStateException e) {
                    send("msg4");
                    send("msg7");
                }
            }
        }
    }

    public void stop() {
        try {
            new S018();
        } finally {
            try {
                if (counter > 5) {
                    send("msg7");
                } else {
                    new Abstract0();
                    send("msg1");
                }
                switch (event) {
                    case EV1:
                        log("trace");
                        new Abstract9();
                        new S043();
                        break;
                }
                new S063();
            } finally {
                new S068();
                if (counter > 3) {
                    new S020();
                    log("trace");
                }
                new S063();
            }
            switch (event) {
                case EV4:
                    send("msg4");
                    try {
                        send("msg3");
                    } catch (TimeoutException e) {
                        update();
                    }
                    break;
                case EV3:
                    log("trace");
                    new S037();
                    break;
            }
        }
        send("msg6");
    }

    public void tick() {
        new S057();
        if (counter > 0) {
            if (counter > 0) {
                send("msg3");
            }
            log("trace");
        } else {
            switch (event) {
                case EV0:
                    if (counter > 0) {
                        new S012();
                        log("trace");
                    } else {
                        new Abstract18();
                        new S058();
                    }
                    send("msg3");
                    break;
                case EV3:
                    new S009();
                    break;
                case EV1:
                    if (counter > 1) {
                        send("msg6");
                        new S007();
                    } else {
                        new S030();
                        new S099();
                    }
                    break;
            }
            switch (event) {
                case EV2:
                    send("msg5");
                    send("msg7");
                    break;
            }
        }
        send("msg4");
    }

    public void reset() {
        update();
        send("msg5");
        update();
    }

    public void pause() {
        new S017();
    }

    public void resume() {
        switch (event) {
            case EV5:
                if (counter > 9) {
                    if (counter > 0) {
                        log("trace");
                        send("msg0");
                        send("msg0");
                    }
                    try {
                        new S027();
                    } catch (IllegalStateException e) {
                        new S069();
                    } finally {
                        send("msg5");
                    }
                    if (counter > 4) {
                        send("msg0");
                        send("msg1");
                        new S049();
                    }
                }
                break;
        }
    }

    public void load() {
        update();
        send("msg0");
    }

    public void save() {
        new S069();
        new S030();
    }
}
